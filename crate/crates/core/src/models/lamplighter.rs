//! `B wr Z` for a finite abelian `B`, built as the lamp group over the
//! adding data and then rewritten as a [`WreathModel`] with `l = 0`.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::z::{adding_data, ZCosets, ZModel};
use super::{WreathElement, WreathModel};
use crate::engine::{theorem_e_data, ExtElem, GData, VirtualEndo};
use crate::error::Result;

pub type LampElem = ExtElem<i64, i64>;

/// The lamp group data as produced by the engine, over `Z` named `z`.
pub fn lamp_data(torsion: Vec<i64>) -> Result<GData<crate::engine::ExtensionModel<ZModel, ZCosets>>> {
    theorem_e_data(torsion, &adding_data("z"), vec![ZCosets])
}

pub fn lamp_to_wreath(x: &LampElem) -> WreathElement {
    WreathElement {
        base: x.phi.iter().map(|(u, c)| (u.clone(), c.clone())).collect(),
        top: x.g.clone(),
    }
}

pub fn wreath_to_lamp(x: &WreathElement) -> LampElem {
    ExtElem {
        phi: x.base.iter().map(|(u, c)| (u.clone(), c.clone())).collect::<BTreeMap<_, _>>(),
        g: x.top.clone(),
    }
}

/// Degree `|B| 2 + 1` data for `B wr Z` with generators `b` (or `b1, ..`)
/// and `z`.
pub fn lamplighter_data(torsion: Vec<i64>) -> Result<GData<WreathModel>> {
    let lamp = lamp_data(torsion.clone())?;
    let base = WreathModel::new(0, torsion, 1);
    let gens = crate::engine::GroupModel::generators(&*lamp.model)
        .into_iter()
        .map(|(n, g)| (n, lamp_to_wreath(&g)))
        .collect();
    let model = Arc::new(base.with_generators(gens));
    let endos = lamp
        .endos
        .iter()
        .map(|e: &VirtualEndo<LampElem>| e.transport(wreath_to_lamp, |x: &LampElem| lamp_to_wreath(x)))
        .collect();
    Ok(GData { model, endos })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::GroupModel;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn products_agree_with_the_lamp_group() {
        let lamp = lamp_data(vec![2, 3]).unwrap();
        let w = WreathModel::new(0, vec![2, 3], 1);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..300 {
            let (u, v) = (lamp.model.random(&mut rng), lamp.model.random(&mut rng));
            let prod = lamp.model.multiply(&u, &v);
            assert_eq!(
                w.multiply(&lamp_to_wreath(&u), &lamp_to_wreath(&v)),
                lamp_to_wreath(&prod)
            );
            assert_eq!(w.invert(&lamp_to_wreath(&u)), lamp_to_wreath(&lamp.model.invert(&u)));
            assert_eq!(wreath_to_lamp(&lamp_to_wreath(&u)), u);
        }
    }

    #[test]
    fn degree_and_names() {
        let d = lamplighter_data(vec![2]).unwrap();
        assert_eq!(d.orbit_sizes(), vec![4, 1]);
        let names: Vec<String> = d.model.generators().into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, vec!["b", "z"]);
        d.validate(300, 5).unwrap();
    }
}
