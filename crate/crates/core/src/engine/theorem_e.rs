//! Lamp groups `B^(U) x| G^s` over the coset spaces `U = prod G_w_i \ G`.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use rand::{Rng, RngCore};

use super::{mixed_digits, mixed_radix, GData, GroupModel, VirtualEndo};
use crate::error::{Error, Result};

/// A computable model of the right coset space `G_w \ G`, where `G_w` is
/// the intersection of the iterated preimages `f^-n(G)`.
pub trait CosetSpace<M: GroupModel>: Send + Sync {
    type Label: Clone + Ord + Hash + Debug + Send + Sync;

    fn label(&self, g: &M::Elem) -> Self::Label;
    /// `label(x g)` from `label(x)`.
    fn right_translate(&self, l: &Self::Label, g: &M::Elem) -> Self::Label;
    fn identity_label(&self) -> Self::Label;
    /// `G_w h -> G_w f(h)` for cosets inside `H`; `None` outside `H`.
    fn lambda(&self, l: &Self::Label) -> Option<Self::Label>;
    /// Whether every coset is in the image of [`CosetSpace::lambda`].
    fn lambda_surjective(&self) -> bool;
}

/// `(phi, (g_1, .., g_s))` with `phi: U -> B` finitely supported.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtElem<L: Ord, E> {
    pub phi: BTreeMap<Vec<L>, Vec<i64>>,
    pub g: Vec<E>,
}

/// `(phi, g)(psi, h) = (u -> phi(u) + psi(u g), g h)`.
pub struct ExtensionModel<M: GroupModel, C: CosetSpace<M>> {
    inner: Arc<M>,
    cosets: Vec<C>,
    torsion: Vec<i64>,
    gens: Vec<(String, ExtElem<C::Label, M::Elem>)>,
}

type Elem<M, C> = ExtElem<<C as CosetSpace<M>>::Label, <M as GroupModel>::Elem>;

impl<M: GroupModel, C: CosetSpace<M>> ExtensionModel<M, C> {
    pub fn new(inner: Arc<M>, cosets: Vec<C>, torsion: Vec<i64>) -> Result<Self> {
        if cosets.is_empty() {
            return Err(Error::BadParams("need at least one coset space".into()));
        }
        if torsion.is_empty() || torsion.iter().any(|&k| k < 2) {
            return Err(Error::BadParams(
                "lamp group must be a non-trivial product of cyclic groups".into(),
            ));
        }
        let mut model = ExtensionModel {
            inner,
            cosets,
            torsion,
            gens: Vec::new(),
        };
        let s = model.cosets.len();
        let r = model.torsion.len();
        let mut gens = Vec::new();
        for k in 0..r {
            let mut c = vec![0; r];
            c[k] = 1;
            let name = if r == 1 { "b".to_string() } else { format!("b{}", k + 1) };
            gens.push((name, model.lamp(model.identity_point(), c)));
        }
        for i in 0..s {
            for (name, g) in model.inner.generators() {
                let name = if s == 1 { name } else { format!("{name}{}", i + 1) };
                let mut tuple = vec![model.inner.identity(); s];
                tuple[i] = g;
                gens.push((name, ExtElem { phi: BTreeMap::new(), g: tuple }));
            }
        }
        model.gens = gens;
        Ok(model)
    }

    pub fn rank(&self) -> usize {
        self.cosets.len()
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    pub fn cosets(&self) -> &[C] {
        &self.cosets
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }

    pub fn identity_point(&self) -> Vec<C::Label> {
        self.cosets.iter().map(|c| c.identity_label()).collect()
    }

    /// The lamp `c` at `point`, with trivial top.
    pub fn lamp(&self, point: Vec<C::Label>, c: Vec<i64>) -> Elem<M, C> {
        let mut phi = BTreeMap::new();
        self.add_at(&mut phi, point, &c, 1);
        ExtElem {
            phi,
            g: vec![self.inner.identity(); self.cosets.len()],
        }
    }

    fn add_at(
        &self,
        phi: &mut BTreeMap<Vec<C::Label>, Vec<i64>>,
        at: Vec<C::Label>,
        c: &[i64],
        sign: i64,
    ) {
        let slot = phi.entry(at.clone()).or_insert_with(|| vec![0; c.len()]);
        for ((s, &x), &k) in slot.iter_mut().zip(c).zip(&self.torsion) {
            *s = (*s + sign * x).rem_euclid(k);
        }
        if slot.iter().all(|&x| x == 0) {
            phi.remove(&at);
        }
    }

    fn translate(&self, point: &[C::Label], by: &[M::Elem]) -> Vec<C::Label> {
        point
            .iter()
            .zip(by)
            .zip(&self.cosets)
            .map(|((l, g), c)| c.right_translate(l, g))
            .collect()
    }

    /// Product of all lamp values.
    pub fn lamp_sum(&self, x: &Elem<M, C>) -> Vec<i64> {
        let mut s = vec![0; self.torsion.len()];
        for c in x.phi.values() {
            for ((a, &v), &k) in s.iter_mut().zip(c).zip(&self.torsion) {
                *a = (*a + v).rem_euclid(k);
            }
        }
        s
    }
}

impl<M: GroupModel, C: CosetSpace<M>> GroupModel for ExtensionModel<M, C> {
    type Elem = Elem<M, C>;

    fn identity(&self) -> Self::Elem {
        ExtElem {
            phi: BTreeMap::new(),
            g: vec![self.inner.identity(); self.cosets.len()],
        }
    }

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ginv: Vec<M::Elem> = a.g.iter().map(|g| self.inner.invert(g)).collect();
        let mut phi = a.phi.clone();
        for (v, c) in &b.phi {
            self.add_at(&mut phi, self.translate(v, &ginv), c, 1);
        }
        ExtElem {
            phi,
            g: a.g.iter().zip(&b.g).map(|(x, y)| self.inner.multiply(x, y)).collect(),
        }
    }

    fn invert(&self, a: &Self::Elem) -> Self::Elem {
        let mut phi = BTreeMap::new();
        for (v, c) in &a.phi {
            self.add_at(&mut phi, self.translate(v, &a.g), c, -1);
        }
        ExtElem {
            phi,
            g: a.g.iter().map(|g| self.inner.invert(g)).collect(),
        }
    }

    fn generators(&self) -> Vec<(String, Self::Elem)> {
        self.gens.clone()
    }

    fn describe(&self, a: &Self::Elem) -> String {
        let g: Vec<String> = a.g.iter().map(|g| self.inner.describe(g)).collect();
        format!("{:?} ({})", a.phi, g.join(", "))
    }

    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        let mut phi = BTreeMap::new();
        for _ in 0..rng.gen_range(0..=4) {
            let point: Vec<C::Label> = self
                .cosets
                .iter()
                .map(|c| c.label(&self.inner.random(rng)))
                .collect();
            let c: Vec<i64> = self.torsion.iter().map(|&k| rng.gen_range(0..k)).collect();
            self.add_at(&mut phi, point, &c, 1);
        }
        ExtElem {
            phi,
            g: (0..self.cosets.len()).map(|_| self.inner.random(rng)).collect(),
        }
    }
}

/// The two virtual endomorphisms of the lamp group over `d`:
/// `chi_1` on `{(phi, h) : prod phi = 1, h in H_1 x .. x H_s}` with
/// transversal `{(b at e, (t_1, .., t_s))}`, letter `b m_1..m_s + (t)`, and
/// `chi_2` the cyclic coordinate shift on the whole group.
///
/// `chi_1` reads `phi` through the inverse of `lambda`; this only yields a
/// finitely supported map when `lambda` is onto, so other inputs are
/// rejected.
pub fn theorem_e_data<M, C>(
    torsion: Vec<i64>,
    d: &GData<M>,
    cosets: Vec<C>,
) -> Result<GData<ExtensionModel<M, C>>>
where
    M: GroupModel + 'static,
    C: CosetSpace<M> + 'static,
{
    let s = d.endos.len();
    if cosets.len() != s {
        return Err(Error::BadParams(format!(
            "{} coset spaces for {s} endomorphisms",
            cosets.len()
        )));
    }
    if d.endos.iter().any(|e| e.index() < 2) {
        return Err(Error::BadParams("every orbit needs at least 2 letters".into()));
    }
    if cosets.iter().any(|c| !c.lambda_surjective()) {
        return Err(Error::Unsupported(
            "coset map lambda is not onto, so chi_1 is not defined".into(),
        ));
    }
    let model = Arc::new(ExtensionModel::new(d.model.clone(), cosets, torsion)?);
    let endos = Arc::new(d.endos.clone());
    let tors: Vec<usize> = model.torsion.iter().map(|&k| k as usize).collect();
    let ms: Vec<usize> = endos.iter().map(VirtualEndo::index).collect();
    let block: usize = ms.iter().product();
    let lamps: usize = tors.iter().product();

    let mut transversal = Vec::with_capacity(lamps * block);
    for b in 0..lamps {
        let c: Vec<i64> = mixed_digits(b, &tors).into_iter().map(|x| x as i64).collect();
        for t in 0..block {
            let digits = mixed_digits(t, &ms);
            let g: Vec<M::Elem> = digits
                .iter()
                .zip(endos.iter())
                .map(|(&j, e)| e.transversal()[j].clone())
                .collect();
            let mut x = ExtElem {
                phi: BTreeMap::new(),
                g,
            };
            if c.iter().any(|&v| v != 0) {
                x.phi.insert(model.identity_point(), c.clone());
            }
            transversal.push(x);
        }
    }

    let (m1, e1) = (model.clone(), endos.clone());
    let contains = move |x: &Elem<M, C>| {
        m1.lamp_sum(x).iter().all(|&v| v == 0)
            && x.g.iter().zip(e1.iter()).all(|(g, e)| e.contains(g))
    };
    let (m2, e2) = (model.clone(), endos.clone());
    let image = move |x: &Elem<M, C>| {
        let mut phi = BTreeMap::new();
        for (v, c) in &x.phi {
            let point: Option<Vec<C::Label>> =
                v.iter().zip(&m2.cosets).map(|(l, cs)| cs.lambda(l)).collect();
            if let Some(p) = point {
                m2.add_at(&mut phi, p, c, 1);
            }
        }
        ExtElem {
            phi,
            g: x.g.iter().zip(e2.iter()).map(|(h, e)| e.image(h)).collect(),
        }
    };
    let (m3, e3, tors3, ms3) = (model.clone(), endos.clone(), tors.clone(), ms.clone());
    let coset_index = move |x: &Elem<M, C>| {
        let b: Vec<usize> = m3.lamp_sum(x).into_iter().map(|v| v as usize).collect();
        let t: Vec<usize> = x.g.iter().zip(e3.iter()).map(|(g, e)| e.coset_index(g)).collect();
        mixed_radix(&b, &tors3) * ms3.iter().product::<usize>() + mixed_radix(&t, &ms3)
    };
    let chi1 = VirtualEndo::new(transversal, contains, image, coset_index);

    let m4 = model.clone();
    let chi2 = VirtualEndo::whole(model.identity(), move |x: &Elem<M, C>| {
        let mut phi = BTreeMap::new();
        for (v, c) in &x.phi {
            let mut p = v.clone();
            p.rotate_right(1);
            m4.add_at(&mut phi, p, c, 1);
        }
        let mut g = x.g.clone();
        g.rotate_left(1);
        ExtElem { phi, g }
    });

    Ok(GData {
        model,
        endos: vec![chi1, chi2],
    })
}
