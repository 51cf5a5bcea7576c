use rand::{Rng, RngCore};

use crate::engine::{CosetSpace, GData, GroupModel, VirtualEndo};

/// The integers under addition with one named generator `1`.
#[derive(Clone, Debug)]
pub struct ZModel {
    name: String,
}

impl ZModel {
    pub fn new(name: &str) -> Self {
        ZModel { name: name.into() }
    }
}

impl GroupModel for ZModel {
    type Elem = i64;

    fn identity(&self) -> i64 {
        0
    }

    fn multiply(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }

    fn invert(&self, a: &i64) -> i64 {
        -a
    }

    fn generators(&self) -> Vec<(String, i64)> {
        vec![(self.name.clone(), 1)]
    }

    fn describe(&self, a: &i64) -> String {
        a.to_string()
    }

    fn random(&self, rng: &mut dyn RngCore) -> i64 {
        rng.gen_range(-64..=64)
    }

    fn pow(&self, a: &i64, n: i64) -> i64 {
        a * n
    }
}

/// `f: 2Z -> Z, 2n -> n` with transversal `{0, 1}`.
pub fn adding_data(name: &str) -> GData<ZModel> {
    let endo = VirtualEndo::new(
        vec![0, 1],
        |g: &i64| g % 2 == 0,
        |h: &i64| h / 2,
        |g: &i64| g.rem_euclid(2) as usize,
    );
    GData::new(ZModel::new(name), vec![endo])
}

/// Cosets of the trivial parabolic subgroup of the adding data: the
/// integers themselves, with `lambda(2n) = n`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ZCosets;

impl CosetSpace<ZModel> for ZCosets {
    type Label = i64;

    fn label(&self, g: &i64) -> i64 {
        *g
    }

    fn right_translate(&self, l: &i64, g: &i64) -> i64 {
        l + g
    }

    fn identity_label(&self) -> i64 {
        0
    }

    fn lambda(&self, l: &i64) -> Option<i64> {
        (l % 2 == 0).then_some(l / 2)
    }

    fn lambda_surjective(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::schreier;

    #[test]
    fn schreier_values() {
        let d = adding_data("a");
        let (m, e) = (&*d.model, &d.endos[0]);
        assert_eq!(schreier(m, e, &0, 0).unwrap(), (0, 0));
        assert_eq!(schreier(m, e, &1, 0).unwrap(), (0, 1));
        assert_eq!(schreier(m, e, &1, 1).unwrap(), (2, 0));
        assert_eq!(schreier(m, e, &2, 0).unwrap(), (2, 0));
        assert_eq!(schreier(m, e, &2, 1).unwrap(), (2, 1));
    }

    #[test]
    fn coset_labels_translate() {
        let c = ZCosets;
        for x in -5..5 {
            for g in -5..5 {
                assert_eq!(c.right_translate(&c.label(&x), &g), c.label(&(x + g)));
            }
        }
        assert_eq!(c.lambda(&6), Some(3));
        assert_eq!(c.lambda(&-3), None);
    }
}
