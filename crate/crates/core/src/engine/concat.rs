use std::collections::BTreeMap;
use std::sync::Arc;

use super::{GData, GroupModel, VirtualEndo};
use crate::error::{Error, Result};
use crate::models::{WreathElement, WreathModel};

/// Coefficient slots of one factor inside `(A_1 + A_2) wr U`, whose
/// coefficients are laid out as `[free_1, free_2, tors_1, tors_2]`.
#[derive(Clone)]
struct Slots {
    map: Vec<usize>,
}

impl Slots {
    fn project(&self, g: &WreathElement) -> WreathElement {
        let mut base = BTreeMap::new();
        for (pos, c) in &g.base {
            let v: Vec<i64> = self.map.iter().map(|&k| c[k]).collect();
            if v.iter().any(|&x| x != 0) {
                base.insert(pos.clone(), v);
            }
        }
        WreathElement {
            base,
            top: g.top.clone(),
        }
    }

    fn embed(&self, g: &WreathElement, width: usize) -> WreathElement {
        let base = g
            .base
            .iter()
            .map(|(pos, c)| {
                let mut v = vec![0; width];
                for (&k, &x) in self.map.iter().zip(c) {
                    v[k] = x;
                }
                (pos.clone(), v)
            })
            .collect();
        WreathElement {
            base,
            top: g.top.clone(),
        }
    }
}

/// Data for `(A_1 + A_2) wr U` from data for `A_1 wr U` and `A_2 wr U`.
/// Each `f_1j` is applied after killing the `A_2` base, and vice versa, so
/// the orbit-type is the concatenation of the two.
pub fn concatenate(d1: &GData<WreathModel>, d2: &GData<WreathModel>) -> Result<GData<WreathModel>> {
    let (m1, m2) = (&*d1.model, &*d2.model);
    if m1.top_dim() != m2.top_dim() {
        return Err(Error::BadParams(format!(
            "top groups differ: Z^{} vs Z^{}",
            m1.top_dim(),
            m2.top_dim()
        )));
    }
    let (l1, l2) = (m1.free_rank(), m2.free_rank());
    let (r1, r2) = (m1.torsion().len(), m2.torsion().len());
    let s1 = Slots {
        map: (0..l1).chain(l1 + l2..l1 + l2 + r1).collect(),
    };
    let s2 = Slots {
        map: (l1..l1 + l2).chain(l1 + l2 + r1..l1 + l2 + r1 + r2).collect(),
    };
    let torsion: Vec<i64> = m1.torsion().iter().chain(m2.torsion()).copied().collect();
    let width = l1 + l2 + r1 + r2;

    let mut gens: Vec<(String, WreathElement)> = Vec::new();
    for (model, slots) in [(m1, &s1), (m2, &s2)] {
        for (name, g) in model.generators() {
            let g = slots.embed(&g, width);
            if gens.iter().any(|(_, h)| *h == g) {
                continue;
            }
            let mut name = name;
            let stem = name.clone();
            let mut k = 2;
            while gens.iter().any(|(n, _)| *n == name) {
                name = format!("{stem}_{k}");
                k += 1;
            }
            gens.push((name, g));
        }
    }
    // Base generators first, each group in its original order.
    gens.sort_by_key(|(_, g)| !g.is_base());
    let combined = WreathModel::new(l1 + l2, torsion, m1.top_dim()).with_generators(gens);
    let model = Arc::new(combined);

    let mut endos = Vec::new();
    for (d, slots) in [(d1, &s1), (d2, &s2)] {
        for endo in &d.endos {
            let transversal = endo.transversal().iter().map(|t| slots.embed(t, width)).collect();
            let (e1, e2, e3) = (endo.clone(), endo.clone(), endo.clone());
            let (p1, p2, p3) = (slots.clone(), slots.clone(), slots.clone());
            endos.push(VirtualEndo::new(
                transversal,
                move |g: &WreathElement| e1.contains(&p1.project(g)),
                move |h: &WreathElement| p2.embed(&e2.image(&p2.project(h)), width),
                move |g: &WreathElement| e3.coset_index(&p3.project(g)),
            ));
        }
    }
    Ok(GData { model, endos })
}
