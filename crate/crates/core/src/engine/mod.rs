//! Self-similar representations built from virtual endomorphisms.
//!
//! A group model together with finite-index subgroups `H_i`, transversals
//! `T_i` and homomorphisms `f_i: H_i -> G` yields an action on the tree of
//! degree `m_1 + .. + m_s`: letter `(i, j)` stands for the coset `H_i t_ij`,
//! `g` sends it to `(i, k)` with `H_i t_ij g = H_i t_ik`, and the section of
//! `g` there is `f_i(t_ij g t_ik^-1)`.

mod concat;
mod extract;
mod power;
mod repr;
mod theorem_e;
mod witness;
mod wreath_k;

pub use concat::concatenate;
pub use extract::{to_mealy, to_word_machine, WordDictionary};
pub use power::{direct_power_data, SeqModel};
pub use repr::Representation;
pub use theorem_e::{theorem_e_data, CosetSpace, ExtElem, ExtensionModel};
pub use witness::{fcore_witness_check, WitnessReport};
pub use wreath_k::{wreath_by_regular_data, RegularGroup, WreathByK, WreathKElem};

use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A group with exact equality on its elements.
pub trait GroupModel: Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;

    fn identity(&self) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn invert(&self, a: &Self::Elem) -> Self::Elem;
    fn generators(&self) -> Vec<(String, Self::Elem)>;

    fn describe(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }

    /// Certificate of non-triviality; exact normal forms make this `a != e`.
    fn is_nontrivial(&self, a: &Self::Elem) -> bool {
        *a != self.identity()
    }

    /// A random element; by default a random word of length up to 8.
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        let gens = self.generators();
        let mut acc = self.identity();
        if gens.is_empty() {
            return acc;
        }
        let len = rng.gen_range(0..=8);
        for _ in 0..len {
            let (_, g) = &gens[rng.gen_range(0..gens.len())];
            let g = if rng.gen_bool(0.5) { self.invert(g) } else { g.clone() };
            acc = self.multiply(&acc, &g);
        }
        acc
    }

    fn pow(&self, a: &Self::Elem, n: i64) -> Self::Elem {
        let base = if n < 0 { self.invert(a) } else { a.clone() };
        let mut acc = self.identity();
        for _ in 0..n.unsigned_abs() {
            acc = self.multiply(&acc, &base);
        }
        acc
    }
}

impl<M: GroupModel + ?Sized> GroupModel for Arc<M> {
    type Elem = M::Elem;
    fn identity(&self) -> Self::Elem {
        (**self).identity()
    }
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).multiply(a, b)
    }
    fn invert(&self, a: &Self::Elem) -> Self::Elem {
        (**self).invert(a)
    }
    fn generators(&self) -> Vec<(String, Self::Elem)> {
        (**self).generators()
    }
    fn describe(&self, a: &Self::Elem) -> String {
        (**self).describe(a)
    }
    fn is_nontrivial(&self, a: &Self::Elem) -> bool {
        (**self).is_nontrivial(a)
    }
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        (**self).random(rng)
    }
}

type Pred<E> = Arc<dyn Fn(&E) -> bool + Send + Sync>;
type Map<E> = Arc<dyn Fn(&E) -> E + Send + Sync>;
type Index<E> = Arc<dyn Fn(&E) -> usize + Send + Sync>;

/// A virtual endomorphism `f: H -> G` with a right transversal of `H`.
/// The first transversal element must be the identity.
pub struct VirtualEndo<E> {
    transversal: Vec<E>,
    contains: Pred<E>,
    image: Map<E>,
    coset_index: Index<E>,
}

impl<E> Clone for VirtualEndo<E>
where
    E: Clone,
{
    fn clone(&self) -> Self {
        VirtualEndo {
            transversal: self.transversal.clone(),
            contains: self.contains.clone(),
            image: self.image.clone(),
            coset_index: self.coset_index.clone(),
        }
    }
}

impl<E: Clone> VirtualEndo<E> {
    pub fn new(
        transversal: Vec<E>,
        contains: impl Fn(&E) -> bool + Send + Sync + 'static,
        image: impl Fn(&E) -> E + Send + Sync + 'static,
        coset_index: impl Fn(&E) -> usize + Send + Sync + 'static,
    ) -> Self {
        VirtualEndo {
            transversal,
            contains: Arc::new(contains),
            image: Arc::new(image),
            coset_index: Arc::new(coset_index),
        }
    }

    /// `H = G`, transversal `{e}`.
    pub fn whole(identity: E, image: impl Fn(&E) -> E + Send + Sync + 'static) -> Self {
        VirtualEndo::new(vec![identity], |_| true, image, |_| 0)
    }

    pub fn index(&self) -> usize {
        self.transversal.len()
    }

    pub fn transversal(&self) -> &[E] {
        &self.transversal
    }

    pub fn contains(&self, g: &E) -> bool {
        (self.contains)(g)
    }

    /// `f(h)`; only meaningful when `contains(h)`.
    pub fn image(&self, h: &E) -> E {
        (self.image)(h)
    }

    /// `j` with `H t_j = H g`.
    pub fn coset_index(&self, g: &E) -> usize {
        (self.coset_index)(g)
    }

    /// Pulls the endomorphism back along an isomorphism `to: F -> E` with
    /// inverse `from`.
    pub fn transport<F: Clone + 'static>(
        &self,
        to: impl Fn(&F) -> E + Send + Sync + Clone + 'static,
        from: impl Fn(&E) -> F + Send + Sync + Clone + 'static,
    ) -> VirtualEndo<F>
    where
        E: 'static,
    {
        let transversal = self.transversal.iter().map(&from).collect();
        let (c, i, k) = (self.contains.clone(), self.image.clone(), self.coset_index.clone());
        let (to1, to2, to3) = (to.clone(), to.clone(), to);
        VirtualEndo::new(
            transversal,
            move |g| c(&to1(g)),
            move |g| from(&i(&to2(g))),
            move |g| k(&to3(g)),
        )
    }
}

/// `θ(g, t_j) = t_j g t_k^-1` together with `k`.
pub fn schreier<M: GroupModel + ?Sized>(
    model: &M,
    endo: &VirtualEndo<M::Elem>,
    g: &M::Elem,
    j: usize,
) -> Result<(M::Elem, usize)> {
    let t = endo
        .transversal
        .get(j)
        .ok_or_else(|| Error::Oracle(format!("transversal index {j} out of range")))?;
    let tg = model.multiply(t, g);
    let k = endo.coset_index(&tg);
    let tk = endo
        .transversal
        .get(k)
        .ok_or_else(|| Error::Oracle(format!("coset index {k} out of range")))?;
    let theta = model.multiply(&tg, &model.invert(tk));
    if !endo.contains(&theta) {
        return Err(Error::Oracle(format!(
            "{} is not in the subgroup",
            model.describe(&theta)
        )));
    }
    Ok((theta, k))
}

/// A group model with virtual endomorphisms `f_1, .., f_s`.
pub struct GData<M: GroupModel> {
    pub model: Arc<M>,
    pub endos: Vec<VirtualEndo<M::Elem>>,
}

impl<M: GroupModel> Clone for GData<M> {
    fn clone(&self) -> Self {
        GData {
            model: self.model.clone(),
            endos: self.endos.clone(),
        }
    }
}

impl<M: GroupModel> GData<M> {
    pub fn new(model: M, endos: Vec<VirtualEndo<M::Elem>>) -> Self {
        GData {
            model: Arc::new(model),
            endos,
        }
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.endos.iter().map(VirtualEndo::index).collect()
    }

    pub fn degree(&self) -> usize {
        self.orbit_sizes().iter().sum()
    }

    /// First letter of each orbit block.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.orbit_sizes()
            .into_iter()
            .map(|m| {
                let o = acc;
                acc += m;
                o
            })
            .collect()
    }

    /// Sampled consistency checks of the subgroup oracles, transversals and
    /// endomorphisms.
    pub fn validate(&self, samples: usize, seed: u64) -> Result<()> {
        let model = &*self.model;
        let e = model.identity();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (i, endo) in self.endos.iter().enumerate() {
            let fail = |msg: String| Err(Error::Oracle(format!("endomorphism {}: {msg}", i + 1)));
            if endo.index() == 0 {
                return fail("empty transversal".into());
            }
            if endo.transversal[0] != e {
                return fail("first transversal element is not the identity".into());
            }
            for (j, t) in endo.transversal.iter().enumerate() {
                if endo.coset_index(t) != j {
                    return fail(format!("transversal element {j} has the wrong coset"));
                }
                if (j == 0) != endo.contains(t) {
                    return fail(format!("membership of transversal element {j}"));
                }
            }
            for _ in 0..samples {
                let g = model.random(&mut rng);
                let g2 = model.random(&mut rng);
                let j = rng.gen_range(0..endo.index());
                let (h1, k) = schreier(model, endo, &g, j)?;
                let (h2, _) = schreier(model, endo, &g2, k)?;
                // Coset index is constant on right cosets.
                let hg = model.multiply(&h1, &g2);
                if endo.coset_index(&hg) != endo.coset_index(&g2) {
                    return fail("coset index not constant on a coset".into());
                }
                let lhs = endo.image(&model.multiply(&h1, &h2));
                let rhs = model.multiply(&endo.image(&h1), &endo.image(&h2));
                if lhs != rhs {
                    return fail(format!(
                        "not a homomorphism on {} and {}",
                        model.describe(&h1),
                        model.describe(&h2)
                    ));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn mixed_radix(digits: &[usize], radix: &[usize]) -> usize {
    digits.iter().zip(radix).fold(0, |acc, (&d, &r)| acc * r + d)
}

pub(crate) fn mixed_digits(mut n: usize, radix: &[usize]) -> Vec<usize> {
    let mut out = vec![0; radix.len()];
    for (slot, &r) in out.iter_mut().zip(radix).rev() {
        *slot = n % r;
        n /= r;
    }
    out
}
