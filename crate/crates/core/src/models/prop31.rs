//! `Z^l wr Z^d` with endomorphisms `f_1, f_2, f_3` of orbit-type `(2,1,1)`,
//! or `(2,1)` when `d = 1`.

use std::collections::BTreeMap;

use super::{WreathElement, WreathModel};
use crate::engine::{GData, GroupModel, VirtualEndo};
use crate::error::{Error, Result};

/// `H_1 = A^X <x_1^2, x_2, .., x_d>`. On monomials `a_i` at `x_1^n q`, `f_1`
/// gives `a_(i-1)` at `x_1^(n/2) q` for even `n` (with `a_0 = a_l`) and `e`
/// for odd `n`; on the top it halves the `x_1` exponent.
pub fn prop31_f1(model: &WreathModel, h: &WreathElement) -> WreathElement {
    let l = model.free_rank();
    let mut base: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
    for (pos, c) in &h.base {
        if pos[0].rem_euclid(2) != 0 {
            continue;
        }
        let mut p = pos.clone();
        p[0] /= 2;
        let mut v = vec![0; l];
        for i in 0..l {
            v[(i + l - 1) % l] = c[i];
        }
        base.insert(p, v);
    }
    let mut top = h.top.clone();
    top[0] /= 2;
    WreathElement { base, top }
}

/// `p(x_1, .., x_d) -> p(x_d, x_1, .., x_(d-1))` on the base and
/// `x_i -> x_(i-1)` on the top.
pub fn prop31_f2(h: &WreathElement) -> WreathElement {
    let rot = |v: &Vec<i64>| {
        let mut w = v.clone();
        w.rotate_left(1);
        w
    };
    WreathElement {
        base: h.base.iter().map(|(p, c)| (rot(p), c.clone())).collect(),
        top: rot(&h.top),
    }
}

/// `a_1^p -> x_1^p(1,..,1)`, other generators to `e`.
pub fn prop31_f3(model: &WreathModel, h: &WreathElement) -> WreathElement {
    let mut top = vec![0; model.top_dim()];
    top[0] = h.base.values().map(|c| c[0]).sum();
    model.top_elem(top)
}

/// Generators `g1..gl` (base) and `a1..ad` (top).
pub fn prop31_data(l: usize, d: usize) -> Result<GData<WreathModel>> {
    if l == 0 || d == 0 {
        return Err(Error::BadParams("need l >= 1 and d >= 1".into()));
    }
    let names: Vec<String> = (1..=l)
        .map(|i| format!("g{i}"))
        .chain((1..=d).map(|i| format!("a{i}")))
        .collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    Ok(prop31_named(l, d, &names))
}

/// `Z wr Z` with generators `g` (base) and `a` (top).
pub fn zwrz_data() -> GData<WreathModel> {
    prop31_named(1, 1, &["g", "a"])
}

fn prop31_named(l: usize, d: usize, names: &[&str]) -> GData<WreathModel> {
    let model = WreathModel::new(l, vec![], d).with_names(names);
    let m1 = model.clone();
    let f1 = VirtualEndo::new(
        vec![model.identity(), model.top_gen(0)],
        |g: &WreathElement| g.top[0].rem_euclid(2) == 0,
        move |h: &WreathElement| prop31_f1(&m1, h),
        |g: &WreathElement| g.top[0].rem_euclid(2) as usize,
    );
    let mut endos = vec![f1];
    if d >= 2 {
        endos.push(VirtualEndo::whole(model.identity(), prop31_f2));
    }
    let m3 = model.clone();
    endos.push(VirtualEndo::whole(model.identity(), move |h: &WreathElement| {
        prop31_f3(&m3, h)
    }));
    GData::new(model, endos)
}
