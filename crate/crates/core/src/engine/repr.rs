use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::{schreier, GData, GroupModel};
use crate::error::Result;
use crate::perm::Perm;
use crate::tree::TreeAction;

const CACHE_LIMIT: usize = 1 << 18;

type Decomposition<E> = Arc<(Vec<E>, Perm)>;

/// The state-closed representation defined by a [`GData`]. States are model
/// elements; recursions are computed on demand and memoized.
pub struct Representation<M: GroupModel> {
    data: GData<M>,
    offsets: Vec<usize>,
    degree: usize,
    cache: RwLock<HashMap<M::Elem, Decomposition<M::Elem>>>,
}

impl<M: GroupModel> Representation<M> {
    /// Builds the representation after a sampled validation of `data`.
    pub fn new(data: GData<M>) -> Result<Self> {
        data.validate(64, 0x5eed)?;
        for g in data.model.generators() {
            Self::compute(&data, &data.offsets(), &g.1)?;
        }
        Ok(Self::new_unchecked(data))
    }

    pub fn new_unchecked(data: GData<M>) -> Self {
        let offsets = data.offsets();
        let degree = data.degree();
        Representation {
            data,
            offsets,
            degree,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn data(&self) -> &GData<M> {
        &self.data
    }

    pub fn model(&self) -> &M {
        &self.data.model
    }

    fn compute(
        data: &GData<M>,
        offsets: &[usize],
        g: &M::Elem,
    ) -> Result<(Vec<M::Elem>, Perm)> {
        let model = &*data.model;
        let degree: usize = data.degree();
        let mut sections = Vec::with_capacity(degree);
        let mut images = Vec::with_capacity(degree);
        for (endo, &off) in data.endos.iter().zip(offsets) {
            for j in 0..endo.index() {
                let (theta, k) = schreier(model, endo, g, j)?;
                sections.push(endo.image(&theta));
                images.push(off + k);
            }
        }
        let perm = Perm::from_images(images).map_err(|_| {
            crate::Error::Oracle(format!(
                "{} does not permute the cosets",
                model.describe(g)
            ))
        })?;
        Ok((sections, perm))
    }

    /// Sections and root permutation, reporting oracle inconsistencies.
    pub fn try_decompose(&self, g: &M::Elem) -> Result<Decomposition<M::Elem>> {
        if let Some(d) = self.cache.read().expect("cache lock").get(g) {
            return Ok(d.clone());
        }
        let d = Arc::new(Self::compute(&self.data, &self.offsets, g)?);
        let mut cache = self.cache.write().expect("cache lock");
        if cache.len() >= CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(g.clone(), d.clone());
        Ok(d)
    }

    fn decomposition(&self, g: &M::Elem) -> Decomposition<M::Elem> {
        self.try_decompose(g)
            .unwrap_or_else(|e| panic!("inconsistent group data: {e}"))
    }
}

impl<M: GroupModel> TreeAction for Representation<M> {
    type State = M::Elem;

    fn degree(&self) -> usize {
        self.degree
    }

    fn identity(&self) -> M::Elem {
        self.data.model.identity()
    }

    fn is_identity(&self, s: &M::Elem) -> bool {
        !self.data.model.is_nontrivial(s)
    }

    fn multiply(&self, a: &M::Elem, b: &M::Elem) -> M::Elem {
        self.data.model.multiply(a, b)
    }

    fn invert(&self, a: &M::Elem) -> M::Elem {
        self.data.model.invert(a)
    }

    fn root_perm(&self, s: &M::Elem) -> Perm {
        self.decomposition(s).1.clone()
    }

    fn section(&self, s: &M::Elem, y: usize) -> M::Elem {
        self.decomposition(s).0[y].clone()
    }

    fn decompose(&self, s: &M::Elem) -> (Vec<M::Elem>, Perm) {
        let d = self.decomposition(s);
        (d.0.clone(), d.1.clone())
    }

    fn exact_equality(&self) -> bool {
        true
    }

    fn generators(&self) -> Vec<(String, M::Elem)> {
        self.data.model.generators()
    }

    fn describe(&self, s: &M::Elem) -> String {
        self.data.model.describe(s)
    }
}
