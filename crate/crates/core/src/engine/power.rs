use std::sync::Arc;

use rand::{Rng, RngCore};

use super::{GData, GroupModel, VirtualEndo};

/// Finitely supported sequences `(g_1, g_2, ..)` over an inner model, with
/// trailing identities trimmed.
pub struct SeqModel<M: GroupModel> {
    inner: Arc<M>,
    cutoff: usize,
}

impl<M: GroupModel> SeqModel<M> {
    /// Generators are the inner generators placed at positions `1..=cutoff`.
    pub fn new(inner: Arc<M>, cutoff: usize) -> Self {
        SeqModel { inner, cutoff }
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }

    pub fn trim(&self, mut v: Vec<M::Elem>) -> Vec<M::Elem> {
        let e = self.inner.identity();
        while v.last() == Some(&e) {
            v.pop();
        }
        v
    }

    /// The sequence with `g` at position `k` (0-based).
    pub fn at(&self, k: usize, g: M::Elem) -> Vec<M::Elem> {
        let mut v = vec![self.inner.identity(); k];
        v.push(g);
        self.trim(v)
    }

    /// `(g_2, g_3, ..)`
    pub fn shift(&self, v: &[M::Elem]) -> Vec<M::Elem> {
        v.iter().skip(1).cloned().collect()
    }
}

impl<M: GroupModel> GroupModel for SeqModel<M> {
    type Elem = Vec<M::Elem>;

    fn identity(&self) -> Self::Elem {
        Vec::new()
    }

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let e = self.inner.identity();
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| {
                self.inner
                    .multiply(a.get(i).unwrap_or(&e), b.get(i).unwrap_or(&e))
            })
            .collect();
        self.trim(v)
    }

    fn invert(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|g| self.inner.invert(g)).collect()
    }

    fn generators(&self) -> Vec<(String, Self::Elem)> {
        let mut out = Vec::new();
        for k in 0..self.cutoff {
            for (name, g) in self.inner.generators() {
                out.push((format!("{name}{}", k + 1), self.at(k, g)));
            }
        }
        out
    }

    fn describe(&self, a: &Self::Elem) -> String {
        let parts: Vec<String> = a.iter().map(|g| self.inner.describe(g)).collect();
        format!("({})", parts.join(", "))
    }

    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        let n = rng.gen_range(0..=self.cutoff.max(1) + 1);
        let v = (0..n).map(|_| self.inner.random(rng)).collect();
        self.trim(v)
    }
}

/// Data for `G^(w)`: each `f_i` lifted to act on the first coordinate, plus
/// the shift `(g_1, g_2, ..) -> (g_2, ..)` on the whole group.
pub fn direct_power_data<M: GroupModel + 'static>(d: &GData<M>, cutoff: usize) -> GData<SeqModel<M>> {
    let model = Arc::new(SeqModel::new(d.model.clone(), cutoff));
    let mut endos = Vec::new();
    for endo in &d.endos {
        let transversal = endo
            .transversal()
            .iter()
            .map(|t| model.at(0, t.clone()))
            .collect();
        let e = d.model.identity();
        let (e1, e2, e3) = (endo.clone(), endo.clone(), endo.clone());
        let (i1, i2) = (e.clone(), e);
        let m = model.clone();
        endos.push(VirtualEndo::new(
            transversal,
            move |g: &Vec<M::Elem>| e1.contains(g.first().unwrap_or(&i1)),
            move |h: &Vec<M::Elem>| {
                let mut v = h.clone();
                if v.is_empty() {
                    return v;
                }
                v[0] = e2.image(&v[0]);
                m.trim(v)
            },
            move |g: &Vec<M::Elem>| e3.coset_index(g.first().unwrap_or(&i2)),
        ));
    }
    let m = model.clone();
    endos.push(VirtualEndo::whole(Vec::new(), move |g: &Vec<M::Elem>| m.shift(g)));
    GData { model, endos }
}
