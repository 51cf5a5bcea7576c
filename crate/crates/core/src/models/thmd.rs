//! `C_p wr Z^2` with generators `s` (the lamp at the origin), `a = y` and
//! `b = x`. Base positions and top vectors are `[x exponent, y exponent]`.

use super::{LaurentPoly2, WreathElement, WreathModel};
use crate::engine::{GData, GroupModel, VirtualEndo};
use crate::error::{Error, Result};
use crate::mealy::is_prime;

/// Order of the transversal `T_1` of `H_1 = G' <x, y>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ordering {
    /// `{e, s, s^2, .., s^(p-1)}`
    Powers,
    /// `{e, s^-1, s^-2, .., s^-(p-1)}`
    Inverses,
}

pub fn thmd_model(p: i64) -> WreathModel {
    let m = WreathModel::new(0, vec![p], 2);
    let gens = vec![
        ("s".to_string(), m.base_gen(0)),
        ("a".to_string(), m.top_gen(1)),
        ("b".to_string(), m.top_gen(0)),
    ];
    m.with_generators(gens)
}

pub fn to_poly(p: i64, g: &WreathElement) -> LaurentPoly2 {
    LaurentPoly2::from_terms(p, g.base.iter().map(|(pos, c)| ((pos[0], pos[1]), c[0])))
}

fn from_poly(model: &WreathModel, s: &LaurentPoly2, top: Vec<i64>) -> WreathElement {
    model.element(s.terms().map(|((i, j), c)| (vec![i, j], vec![c])), top)
}

/// `a^s(x,y) x^i y^j -> a^q(y) y^j`, where `s = p(x)(x-1) + q(y)(y-1) + ..`.
pub fn thmd_f1(model: &WreathModel, h: &WreathElement) -> WreathElement {
    let p = model.torsion()[0];
    let (_, q, _) = to_poly(p, h)
        .decompose()
        .expect("f_1 is only applied inside H_1");
    from_poly(model, &q, vec![0, h.top[1]])
}

/// `x -> y`, `y -> xy` on monomials and on the top.
pub fn thmd_f2(model: &WreathModel, h: &WreathElement) -> WreathElement {
    let terms = h.base.iter().map(|(pos, c)| (vec![pos[1], pos[0] + pos[1]], c.clone()));
    model.element(terms, vec![h.top[1], h.top[0] + h.top[1]])
}

pub fn thmd_data(p: usize, ordering: Ordering) -> Result<GData<WreathModel>> {
    if !is_prime(p) {
        return Err(Error::BadParams(format!("p must be prime, got {p}")));
    }
    let pi = p as i64;
    let model = thmd_model(pi);
    let sign = match ordering {
        Ordering::Powers => 1,
        Ordering::Inverses => -1,
    };
    let transversal = (0..pi).map(|k| model.monomial(0, vec![0, 0], sign * k)).collect();
    let (m1, m2, m3) = (model.clone(), model.clone(), model.clone());
    let f1 = VirtualEndo::new(
        transversal,
        move |g: &WreathElement| m1.coeff_sum(g)[0] == 0,
        move |h: &WreathElement| thmd_f1(&m2, h),
        move |g: &WreathElement| (sign * m3.coeff_sum(g)[0]).rem_euclid(pi) as usize,
    );
    let m4 = model.clone();
    let f2 = VirtualEndo::whole(model.identity(), move |h: &WreathElement| thmd_f2(&m4, h));
    Ok(GData::new(model, vec![f1, f2]))
}
