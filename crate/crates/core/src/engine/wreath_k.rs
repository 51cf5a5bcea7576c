use std::sync::Arc;

use rand::{Rng, RngCore};

use super::{mixed_digits, mixed_radix, GData, GroupModel, VirtualEndo};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// A regular permutation group on `s` points. Element `k` is the unique
/// permutation sending `0` to `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularGroup {
    perms: Vec<Perm>,
    gens: Vec<usize>,
}

impl RegularGroup {
    pub fn cyclic(s: usize) -> Self {
        let c = Perm::cycle(s);
        let perms = (0..s as i64).map(|k| c.pow(k)).collect();
        RegularGroup {
            perms,
            gens: if s > 1 { vec![1] } else { vec![] },
        }
    }

    /// The group generated by `gens`, which must act regularly.
    pub fn generated_by(s: usize, gens: &[Perm]) -> Result<Self> {
        if s == 0 || gens.iter().any(|g| g.degree() != s) {
            return Err(Error::BadParams("generators must act on s >= 1 points".into()));
        }
        let mut perms: Vec<Perm> = vec![Perm::identity(s)];
        let mut k = 0;
        while k < perms.len() {
            for g in gens {
                let p = perms[k].then(g);
                if !perms.contains(&p) {
                    perms.push(p);
                }
            }
            k += 1;
            if perms.len() > s {
                return Err(Error::BadParams("group is not regular".into()));
            }
        }
        let mut by_image: Vec<Option<Perm>> = vec![None; s];
        for p in perms {
            let slot = &mut by_image[p.image(0)];
            if slot.is_some() {
                return Err(Error::BadParams("group is not regular".into()));
            }
            *slot = Some(p);
        }
        let perms: Vec<Perm> = by_image
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::BadParams("group is not transitive".into()))?;
        let gens = gens.iter().map(|g| g.image(0)).filter(|&k| k != 0).collect();
        Ok(RegularGroup { perms, gens })
    }

    pub fn degree(&self) -> usize {
        self.perms.len()
    }

    pub fn perm(&self, k: usize) -> &Perm {
        &self.perms[k]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.perms[b].image(self.perms[a].image(0))
    }

    pub fn inv(&self, a: usize) -> usize {
        self.perms[a].inverse().image(0)
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WreathKElem<E> {
    pub coords: Vec<E>,
    pub k: usize,
}

/// `G wr K` for a regular `K`:
/// `(g; k)(h; k') = (j -> g_j h_(j^k); k k')`.
pub struct WreathByK<M: GroupModel> {
    inner: Arc<M>,
    group: RegularGroup,
    gens: Vec<(String, WreathKElem<M::Elem>)>,
}

impl<M: GroupModel> WreathByK<M> {
    /// Generators: `K`'s generators named by `k_names`, then the inner
    /// generators placed at coordinate 0.
    pub fn new(inner: Arc<M>, group: RegularGroup, k_names: &[&str]) -> Result<Self> {
        if k_names.len() != group.generators().len() {
            return Err(Error::BadParams(format!(
                "{} names for {} generators of K",
                k_names.len(),
                group.generators().len()
            )));
        }
        let s = group.degree();
        let e = inner.identity();
        let mut gens: Vec<(String, WreathKElem<M::Elem>)> = k_names
            .iter()
            .zip(group.generators())
            .map(|(n, &k)| {
                (
                    n.to_string(),
                    WreathKElem {
                        coords: vec![e.clone(); s],
                        k,
                    },
                )
            })
            .collect();
        for (name, g) in inner.generators() {
            let mut coords = vec![e.clone(); s];
            coords[0] = g;
            gens.push((name, WreathKElem { coords, k: 0 }));
        }
        Ok(WreathByK { inner, group, gens })
    }

    pub fn group(&self) -> &RegularGroup {
        &self.group
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }
}

impl<M: GroupModel> GroupModel for WreathByK<M> {
    type Elem = WreathKElem<M::Elem>;

    fn identity(&self) -> Self::Elem {
        WreathKElem {
            coords: vec![self.inner.identity(); self.group.degree()],
            k: 0,
        }
    }

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let p = self.group.perm(a.k);
        WreathKElem {
            coords: (0..a.coords.len())
                .map(|j| self.inner.multiply(&a.coords[j], &b.coords[p.image(j)]))
                .collect(),
            k: self.group.mul(a.k, b.k),
        }
    }

    fn invert(&self, a: &Self::Elem) -> Self::Elem {
        let pinv = self.group.perm(a.k).inverse();
        WreathKElem {
            coords: (0..a.coords.len())
                .map(|i| self.inner.invert(&a.coords[pinv.image(i)]))
                .collect(),
            k: self.group.inv(a.k),
        }
    }

    fn generators(&self) -> Vec<(String, Self::Elem)> {
        self.gens.clone()
    }

    fn describe(&self, a: &Self::Elem) -> String {
        let parts: Vec<String> = a.coords.iter().map(|g| self.inner.describe(g)).collect();
        format!("({}; {})", parts.join(", "), self.group.perm(a.k))
    }

    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        WreathKElem {
            coords: (0..self.group.degree()).map(|_| self.inner.random(rng)).collect(),
            k: rng.gen_range(0..self.group.degree()),
        }
    }
}

/// The single virtual endomorphism `(h_1, .., h_s) -> (f_1 h_1, .., f_s h_s)`
/// on `H_1 x .. x H_s`. Transversal `{(t_1j1, .., t_sjs; k)}`, with letter
/// `k (m_1 .. m_s) + (j_1 .. j_s)` read in mixed radix. With fewer than `s`
/// endomorphisms the remaining coordinates use the identity on `G`.
pub fn wreath_by_regular_data<M: GroupModel + 'static>(
    d: &GData<M>,
    group: RegularGroup,
    k_names: &[&str],
) -> Result<GData<WreathByK<M>>> {
    let s = group.degree();
    if d.endos.len() > s {
        return Err(Error::BadParams(format!(
            "K acts on {s} points but there are {} endomorphisms",
            d.endos.len()
        )));
    }
    let model = Arc::new(WreathByK::new(d.model.clone(), group, k_names)?);
    let mut padded = d.endos.clone();
    while padded.len() < s {
        padded.push(VirtualEndo::whole(d.model.identity(), |h: &M::Elem| h.clone()));
    }
    let endos = Arc::new(padded);
    let ms: Vec<usize> = endos.iter().map(VirtualEndo::index).collect();
    let block: usize = ms.iter().product();

    let mut transversal = Vec::with_capacity(s * block);
    for k in 0..s {
        for t in 0..block {
            let coords = mixed_digits(t, &ms)
                .iter()
                .zip(endos.iter())
                .map(|(&j, e)| e.transversal()[j].clone())
                .collect();
            transversal.push(WreathKElem { coords, k });
        }
    }
    let e1 = endos.clone();
    let contains = move |x: &WreathKElem<M::Elem>| {
        x.k == 0 && x.coords.iter().zip(e1.iter()).all(|(g, e)| e.contains(g))
    };
    let e2 = endos.clone();
    let image = move |x: &WreathKElem<M::Elem>| WreathKElem {
        coords: x.coords.iter().zip(e2.iter()).map(|(h, e)| e.image(h)).collect(),
        k: 0,
    };
    let e3 = endos.clone();
    let coset_index = move |x: &WreathKElem<M::Elem>| {
        let j: Vec<usize> = x.coords.iter().zip(e3.iter()).map(|(g, e)| e.coset_index(g)).collect();
        x.k * block + mixed_radix(&j, &ms)
    };
    Ok(GData {
        model,
        endos: vec![VirtualEndo::new(transversal, contains, image, coset_index)],
    })
}
