//! Laurent polynomials in `x, y` over `Z/p`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    p: i64,
    coeffs: BTreeMap<(i64, i64), i64>,
}

impl LaurentPoly2 {
    pub fn zero(p: i64) -> Self {
        assert!(p >= 2, "modulus must be >= 2");
        LaurentPoly2 {
            p,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), i64)>>(p: i64, terms: I) -> Self {
        let mut out = LaurentPoly2::zero(p);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// `c x^i y^j`
    pub fn monomial(p: i64, i: i64, j: i64, c: i64) -> Self {
        LaurentPoly2::from_terms(p, [((i, j), c)])
    }

    pub fn one(p: i64) -> Self {
        LaurentPoly2::monomial(p, 0, 0, 1)
    }

    pub fn x(p: i64) -> Self {
        LaurentPoly2::monomial(p, 1, 0, 1)
    }

    pub fn y(p: i64) -> Self {
        LaurentPoly2::monomial(p, 0, 1, 1)
    }

    pub fn modulus(&self) -> i64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, i: i64, j: i64) -> i64 {
        self.coeffs.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, e: (i64, i64), c: i64) {
        let slot = self.coeffs.entry(e).or_insert(0);
        *slot = (*slot + c).rem_euclid(self.p);
        if *slot == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly2::from_terms(self.p, self.terms().map(|(e, c)| (e, -c)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly2::zero(self.p);
        for ((i, j), c) in self.terms() {
            for ((k, l), d) in other.terms() {
                out.add_term((i + k, j + l), c * d);
            }
        }
        out
    }

    /// Coefficient sum, that is the value at `x = y = 1`.
    pub fn augmentation(&self) -> i64 {
        self.terms().map(|(_, c)| c).sum::<i64>().rem_euclid(self.p)
    }

    /// `s(x, 1)`
    pub fn at_y_one(&self) -> Self {
        LaurentPoly2::from_terms(self.p, self.terms().map(|((i, _), c)| ((i, 0), c)))
    }

    /// `s(1, y)`
    pub fn at_x_one(&self) -> Self {
        LaurentPoly2::from_terms(self.p, self.terms().map(|((_, j), c)| ((0, j), c)))
    }

    /// Exact quotient by `x - 1`; needs every row sum (fixed `y` degree) to
    /// vanish.
    pub fn div_x_minus_one(&self) -> Result<Self> {
        self.div_line(false)
    }

    /// Exact quotient by `y - 1`.
    pub fn div_y_minus_one(&self) -> Result<Self> {
        self.div_line(true)
    }

    // If u(t) = (t - 1) v(t) then u_n = v_(n-1) - v_n, so v_n = -(u_..n summed).
    fn div_line(&self, along_y: bool) -> Result<Self> {
        let mut lines: BTreeMap<i64, BTreeMap<i64, i64>> = BTreeMap::new();
        for ((i, j), c) in self.terms() {
            let (key, pos) = if along_y { (i, j) } else { (j, i) };
            lines.entry(key).or_default().insert(pos, c);
        }
        let mut out = LaurentPoly2::zero(self.p);
        for (key, line) in lines {
            let lo = *line.keys().next().expect("non-empty line");
            let hi = *line.keys().next_back().expect("non-empty line");
            let mut acc = 0i64;
            for n in lo..=hi {
                acc = (acc + line.get(&n).copied().unwrap_or(0)).rem_euclid(self.p);
                if n < hi {
                    let e = if along_y { (key, n) } else { (n, key) };
                    out.add_term(e, -acc);
                }
            }
            if acc != 0 {
                return Err(Error::BadParams(format!(
                    "{self} is not divisible by {}",
                    if along_y { "y - 1" } else { "x - 1" }
                )));
            }
        }
        Ok(out)
    }

    /// `s = p(x)(x - 1) + q(y)(y - 1) + r(x, y)(x - 1)(y - 1)` for `s` in
    /// the augmentation ideal. Returns `(p, q, r)`.
    pub fn decompose(&self) -> Result<(Self, Self, Self)> {
        if self.augmentation() != 0 {
            return Err(Error::BadParams(format!(
                "{self} is not in the ideal (x - 1, y - 1)"
            )));
        }
        let px = self.at_y_one().div_x_minus_one()?;
        let qy = self.at_x_one().div_y_minus_one()?;
        let p = self.p;
        let xm1 = LaurentPoly2::x(p).sub(&LaurentPoly2::one(p));
        let ym1 = LaurentPoly2::y(p).sub(&LaurentPoly2::one(p));
        let rest = self.sub(&px.mul(&xm1)).sub(&qy.mul(&ym1));
        let r = rest.div_x_minus_one()?.div_y_minus_one()?;
        Ok((px, qy, r))
    }

    pub fn recompose(p_x: &Self, q_y: &Self, r: &Self) -> Self {
        let p = p_x.p;
        let xm1 = LaurentPoly2::x(p).sub(&LaurentPoly2::one(p));
        let ym1 = LaurentPoly2::y(p).sub(&LaurentPoly2::one(p));
        p_x.mul(&xm1)
            .add(&q_y.mul(&ym1))
            .add(&r.mul(&xm1).mul(&ym1))
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, ((i, j), c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            if i != 0 {
                write!(f, "x^{i}")?;
            }
            if j != 0 {
                write!(f, "y^{j}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod {})", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decompose_examples() {
        let p = 3;
        let one = LaurentPoly2::one(p);
        let (a, b, c) = LaurentPoly2::zero(p).decompose().unwrap();
        assert!(a.is_zero() && b.is_zero() && c.is_zero());

        let xm1 = LaurentPoly2::x(p).sub(&one);
        let (a, b, c) = xm1.decompose().unwrap();
        assert_eq!(a, one);
        assert!(b.is_zero() && c.is_zero());

        let xy_m1 = LaurentPoly2::monomial(p, 1, 1, 1).sub(&one);
        let (a, b, c) = xy_m1.decompose().unwrap();
        assert_eq!((a.clone(), b.clone(), c.clone()), (one.clone(), one.clone(), one.clone()));
        assert_eq!(LaurentPoly2::recompose(&a, &b, &c), xy_m1);
    }

    #[test]
    fn rejects_outside_ideal() {
        assert!(LaurentPoly2::x(2).decompose().is_err());
    }

    #[test]
    fn negative_exponents() {
        let p = 5;
        let s = LaurentPoly2::from_terms(p, [((0, 0), 1), ((0, -1), -1)]);
        let (a, q, r) = s.decompose().unwrap();
        assert!(a.is_zero() && r.is_zero());
        assert_eq!(q, LaurentPoly2::monomial(p, 0, -1, 1));
    }

    fn arb_ideal(p: i64) -> impl Strategy<Value = LaurentPoly2> {
        prop::collection::vec(((-4i64..=4, -4i64..=4), 0..p), 0..10).prop_map(move |terms| {
            let mut s = LaurentPoly2::from_terms(p, terms);
            let aug = s.augmentation();
            s.add_term((0, 0), -aug);
            s
        })
    }

    proptest! {
        #[test]
        fn recompose_inverts_decompose_mod2(s in arb_ideal(2)) {
            let (a, b, c) = s.decompose().unwrap();
            prop_assert_eq!(LaurentPoly2::recompose(&a, &b, &c), s);
        }

        #[test]
        fn recompose_inverts_decompose_mod3(s in arb_ideal(3)) {
            let (a, b, c) = s.decompose().unwrap();
            prop_assert_eq!(LaurentPoly2::recompose(&a, &b, &c), s);
        }

        #[test]
        fn recompose_inverts_decompose_mod5(s in arb_ideal(5)) {
            let (a, b, c) = s.decompose().unwrap();
            prop_assert!(a.terms().all(|((_, j), _)| j == 0));
            prop_assert!(b.terms().all(|((i, _), _)| i == 0));
            prop_assert_eq!(LaurentPoly2::recompose(&a, &b, &c), s);
        }
    }
}
