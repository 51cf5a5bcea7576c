//! `(Z^l + B) wr Z^d` with `B = C_k1 + .. + C_kr`.
//!
//! An element is a pair `(b, t)` of a finitely supported base map
//! `Z^d -> Z^l + B` and a top vector `t`. The top acts on the base by
//! translation: `(b1, t1)(b2, t2) = (b1 + b2(. + t1), t1 + t2)`, so the
//! conjugate `a^x = x^-1 a x` of a base element moves its support by `+x`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, RngCore};

use crate::engine::GroupModel;

pub type Coeff = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct WreathElement {
    /// Position -> coefficient; zero coefficients never stored.
    pub base: BTreeMap<Vec<i64>, Coeff>,
    pub top: Vec<i64>,
}

impl WreathElement {
    pub fn is_base(&self) -> bool {
        self.top.iter().all(|&t| t == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathModel {
    free: usize,
    torsion: Vec<i64>,
    d: usize,
    gens: Vec<(String, WreathElement)>,
}

impl WreathModel {
    /// Generators default to `a1..` for the base coordinates (free ones
    /// first) and `x1..xd` for the top.
    pub fn new(free: usize, torsion: Vec<i64>, d: usize) -> Self {
        assert!(torsion.iter().all(|&k| k >= 2), "torsion orders must be >= 2");
        let mut m = WreathModel {
            free,
            torsion,
            d,
            gens: Vec::new(),
        };
        let base = (0..m.coeff_len()).map(|i| (format!("a{}", i + 1), m.base_gen(i)));
        let top = (0..d).map(|j| (format!("x{}", j + 1), m.top_gen(j)));
        m.gens = base.chain(top).collect();
        m
    }

    /// Replaces the generating set, e.g. to rename or reorder it.
    pub fn with_generators(mut self, gens: Vec<(String, WreathElement)>) -> Self {
        self.gens = gens;
        self
    }

    /// Renames the default generators in order.
    pub fn with_names(self, names: &[&str]) -> Self {
        assert_eq!(names.len(), self.gens.len(), "one name per generator");
        let gens = names
            .iter()
            .zip(self.gens.iter())
            .map(|(n, (_, g))| (n.to_string(), g.clone()))
            .collect();
        self.with_generators(gens)
    }

    pub fn free_rank(&self) -> usize {
        self.free
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    pub fn coeff_len(&self) -> usize {
        self.free + self.torsion.len()
    }

    pub fn top_dim(&self) -> usize {
        self.d
    }

    pub fn zero_coeff(&self) -> Coeff {
        vec![0; self.coeff_len()]
    }

    /// Reduces torsion coordinates into `[0, k)`.
    pub fn reduce(&self, c: &mut Coeff) {
        for (x, &k) in c[self.free..].iter_mut().zip(&self.torsion) {
            *x = x.rem_euclid(k);
        }
    }

    fn add_at(&self, base: &mut BTreeMap<Vec<i64>, Coeff>, pos: Vec<i64>, c: &Coeff, sign: i64) {
        let slot = base.entry(pos).or_insert_with(|| vec![0; c.len()]);
        for (s, &x) in slot.iter_mut().zip(c) {
            *s += sign * x;
        }
        for (x, &k) in slot[self.free..].iter_mut().zip(&self.torsion) {
            *x = x.rem_euclid(k);
        }
    }

    fn prune(base: &mut BTreeMap<Vec<i64>, Coeff>) {
        base.retain(|_, c| c.iter().any(|&x| x != 0));
    }

    /// Builds a canonical element from `(position, coefficient)` terms.
    pub fn element<I>(&self, terms: I, top: Vec<i64>) -> WreathElement
    where
        I: IntoIterator<Item = (Vec<i64>, Coeff)>,
    {
        assert_eq!(top.len(), self.d, "top dimension");
        let mut base = BTreeMap::new();
        for (pos, c) in terms {
            assert_eq!(pos.len(), self.d, "position dimension");
            assert_eq!(c.len(), self.coeff_len(), "coefficient length");
            self.add_at(&mut base, pos, &c, 1);
        }
        Self::prune(&mut base);
        WreathElement { base, top }
    }

    /// `amount` times base coordinate `i`, placed at `pos`.
    pub fn monomial(&self, i: usize, pos: Vec<i64>, amount: i64) -> WreathElement {
        let mut c = self.zero_coeff();
        c[i] = amount;
        self.element([(pos, c)], vec![0; self.d])
    }

    pub fn base_gen(&self, i: usize) -> WreathElement {
        self.monomial(i, vec![0; self.d], 1)
    }

    pub fn top_elem(&self, top: Vec<i64>) -> WreathElement {
        self.element([], top)
    }

    pub fn top_gen(&self, j: usize) -> WreathElement {
        let mut t = vec![0; self.d];
        t[j] = 1;
        self.top_elem(t)
    }

    /// `(b, 0)`: the base part of `g`.
    pub fn base_part(&self, g: &WreathElement) -> WreathElement {
        WreathElement {
            base: g.base.clone(),
            top: vec![0; self.d],
        }
    }

    /// Sum of all base coefficients.
    pub fn coeff_sum(&self, g: &WreathElement) -> Coeff {
        let mut s = self.zero_coeff();
        for c in g.base.values() {
            for (a, &x) in s.iter_mut().zip(c) {
                *a += x;
            }
        }
        self.reduce(&mut s);
        s
    }
}

fn shifted(pos: &[i64], by: &[i64], sign: i64) -> Vec<i64> {
    pos.iter().zip(by).map(|(p, b)| p + sign * b).collect()
}

impl GroupModel for WreathModel {
    type Elem = WreathElement;

    fn identity(&self) -> WreathElement {
        WreathElement {
            base: BTreeMap::new(),
            top: vec![0; self.d],
        }
    }

    fn multiply(&self, a: &WreathElement, b: &WreathElement) -> WreathElement {
        let mut base = a.base.clone();
        for (pos, c) in &b.base {
            self.add_at(&mut base, shifted(pos, &a.top, -1), c, 1);
        }
        Self::prune(&mut base);
        WreathElement {
            base,
            top: a.top.iter().zip(&b.top).map(|(x, y)| x + y).collect(),
        }
    }

    fn invert(&self, a: &WreathElement) -> WreathElement {
        let mut base = BTreeMap::new();
        for (pos, c) in &a.base {
            self.add_at(&mut base, shifted(pos, &a.top, 1), c, -1);
        }
        Self::prune(&mut base);
        WreathElement {
            base,
            top: a.top.iter().map(|x| -x).collect(),
        }
    }

    fn generators(&self) -> Vec<(String, WreathElement)> {
        self.gens.clone()
    }

    fn describe(&self, a: &WreathElement) -> String {
        let mut s = String::from("{");
        for (k, (pos, c)) in a.base.iter().enumerate() {
            if k > 0 {
                s.push_str(", ");
            }
            let _ = write!(s, "{pos:?}:{c:?}");
        }
        let _ = write!(s, "}} {:?}", a.top);
        s
    }

    fn random(&self, rng: &mut dyn RngCore) -> WreathElement {
        let n = rng.gen_range(0..=4);
        let terms: Vec<(Vec<i64>, Coeff)> = (0..n)
            .map(|_| {
                let pos = (0..self.d).map(|_| rng.gen_range(-3..=3)).collect();
                let mut c: Coeff = (0..self.free).map(|_| rng.gen_range(-3..=3)).collect();
                c.extend(self.torsion.iter().map(|&k| rng.gen_range(0..k)));
                (pos, c)
            })
            .collect();
        let top = (0..self.d).map(|_| rng.gen_range(-3..=3)).collect();
        self.element(terms, top)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_is_neutral() {
        let m = WreathModel::new(2, vec![3], 2);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let u = m.random(&mut rng);
            assert_eq!(m.multiply(&u, &m.identity()), u);
            assert_eq!(m.multiply(&m.identity(), &u), u);
        }
    }

    #[test]
    fn base_times_top() {
        // (a at 0, top x)(a at 0, top 0) = (a at 0 + a at -x, top x)
        let m = WreathModel::new(1, vec![], 1);
        let a = m.base_gen(0);
        let x = m.top_gen(0);
        let ax = m.multiply(&a, &x);
        let prod = m.multiply(&ax, &a);
        let expect = m.element([(vec![0], vec![1]), (vec![-1], vec![1])], vec![1]);
        assert_eq!(prod, expect);
    }

    #[test]
    fn conjugation_moves_support_by_top() {
        let m = WreathModel::new(1, vec![], 2);
        let a = m.base_gen(0);
        let x = m.top_elem(vec![2, -1]);
        let conj = m.multiply(&m.multiply(&m.invert(&x), &a), &x);
        assert_eq!(conj, m.monomial(0, vec![2, -1], 1));
    }

    #[test]
    fn torsion_reduces() {
        let m = WreathModel::new(0, vec![2], 1);
        let b = m.base_gen(0);
        assert_eq!(m.multiply(&b, &b), m.identity());
        assert_eq!(m.invert(&b), b);
    }

    #[test]
    fn group_axioms_sampled() {
        for m in [
            WreathModel::new(1, vec![], 1),
            WreathModel::new(2, vec![], 2),
            WreathModel::new(0, vec![3], 2),
            WreathModel::new(1, vec![2, 4], 1),
        ] {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..200 {
                let (u, v, w) = (m.random(&mut rng), m.random(&mut rng), m.random(&mut rng));
                assert_eq!(
                    m.multiply(&m.multiply(&u, &v), &w),
                    m.multiply(&u, &m.multiply(&v, &w))
                );
                assert_eq!(m.multiply(&u, &m.invert(&u)), m.identity());
                assert_eq!(m.multiply(&m.invert(&u), &u), m.identity());
            }
        }
    }
}
