//! Exact group models and their virtual endomorphisms.

mod laurent;
mod lamplighter;
mod prop31;
mod thmd;
mod wreath;
mod z;

pub use laurent::LaurentPoly2;
pub use lamplighter::{lamp_data, lamp_to_wreath, lamplighter_data, wreath_to_lamp, LampElem};
pub use prop31::{prop31_data, prop31_f1, prop31_f2, prop31_f3, zwrz_data};
pub use thmd::{thmd_data, thmd_f1, thmd_f2, thmd_model, to_poly, Ordering};
pub use wreath::{Coeff, WreathElement, WreathModel};
pub use z::{adding_data, ZCosets, ZModel};

use crate::engine::{direct_power_data, wreath_by_regular_data, GData, RegularGroup, SeqModel, WreathByK};
use crate::error::Result;
use crate::tree::SelfSimilarMachine;
use crate::word::GroupWord;

/// `Z^(w)` cut off after `n` coordinates, generators `a1..an`.
pub fn zomega_data(n: usize) -> GData<SeqModel<ZModel>> {
    direct_power_data(&adding_data("a"), n)
}

/// `(Z wr Z) wr C_2` with generators `s`, `g`, `a`.
pub fn zwrz_wr_c2_data() -> GData<WreathByK<WreathModel>> {
    wreath_by_regular_data(&zwrz_data(), RegularGroup::cyclic(2), &["s"])
        .expect("two endomorphisms and a regular C_2")
}

/// `a^(n_i) b^(n_(i-1))` for Fibonacci `n_i`, starting `a, a b, a^2 b, ..`,
/// as words over the literal `thmD` machine.
pub fn fibonacci_states(mach: &SelfSimilarMachine, n: usize) -> Result<Vec<GroupWord>> {
    let a = mach.word("a")?;
    let b = mach.word("b")?;
    let (mut prev, mut cur) = (0i64, 1i64);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(a.pow(cur).multiply(&b.pow(prev)));
        let next = cur + prev;
        prev = cur;
        cur = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mealy::builtin;

    #[test]
    fn fibonacci_words() {
        let m = builtin("thmD(2)").unwrap().machine();
        let names = m.names().to_vec();
        let show = |v: Vec<GroupWord>| -> Vec<String> {
            v.iter().map(|w| w.display(&names).to_string()).collect()
        };
        assert_eq!(show(fibonacci_states(&m, 2).unwrap()), vec!["a", "a b"]);
        assert_eq!(
            show(fibonacci_states(&m, 4).unwrap()),
            vec!["a", "a b", "a a b", "a a a b b"]
        );
    }
}
