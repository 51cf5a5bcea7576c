//! Small worked examples, each checked against a value computed by hand.

use selfsim::engine::{
    concatenate, fcore_witness_check, schreier, wreath_by_regular_data, GroupModel, RegularGroup,
    Representation,
};
use selfsim::mealy::{builtin, emit, parse};
use selfsim::models::{
    adding_data, fibonacci_states, thmd_data, zomega_data, zwrz_data, Ordering, WreathModel,
};
use selfsim::tree::{
    apply, equal_to_depth, find_moving_string, parse_string, portrait, states, Automorphism,
    TreeAction,
};
use selfsim::{GroupWord, Perm};

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

#[test]
fn permutation_product_and_inverse() {
    let t = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
    let c = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
    // 0 -> 1 -> 2, 1 -> 0 -> 1, 2 -> 2 -> 0
    assert_eq!(t.compose(&c).unwrap(), Perm::from_cycles(3, &[&[0, 2]]).unwrap());
    assert_eq!(c.inverse(), Perm::from_cycles(3, &[&[0, 2, 1]]).unwrap());
}

#[test]
fn word_reduction() {
    let n = names(&["a", "b"]);
    let u = GroupWord::parse("a b", &n).unwrap();
    let v = GroupWord::parse("b^-1 a", &n).unwrap();
    assert_eq!(u.multiply(&v), GroupWord::parse("a a", &n).unwrap());
    let w = GroupWord::parse("a b^-1", &n).unwrap();
    assert_eq!(w.inverse().display(&n).to_string(), "b a^-1");
}

#[test]
fn adding_machine_recursion() {
    let m = builtin("adding").unwrap().machine();
    let a = m.word("a").unwrap();
    assert_eq!(m.root_perm(&a), Perm::cycle(2));
    assert!(m.root_perm(&m.word("a a").unwrap()).is_identity());
    assert!(m.section(&a, 0).is_identity());
    assert_eq!(m.section(&a, 1), a);
    assert_eq!(apply(&m, &a, &parse_string("111").unwrap()).unwrap(), vec![0, 0, 0]);
    let a2 = m.word("a a").unwrap();
    let e = GroupWord::identity();
    assert!(equal_to_depth(&m, &a2, &e, 1));
    assert!(!equal_to_depth(&m, &a2, &e, 2));
    assert_eq!(find_moving_string(&m, &a, 4), Some(vec![0]));
    assert_eq!(find_moving_string(&m, &a2, 4), Some(vec![0, 0]));
}

#[test]
fn adding_machine_portrait_and_states() {
    let m = builtin("adding").unwrap().machine();
    let a = m.word("a").unwrap();
    let p = portrait(&m, &a, 2);
    assert_eq!(p.label(&[]), Some(&Perm::cycle(2)));
    assert!(p.label(&[0]).unwrap().is_identity());
    assert_eq!(p.label(&[1]), Some(&Perm::cycle(2)));
    let set = states(&m, &a, 10, 8);
    assert_eq!(set.states.len(), 2);
    assert!(!set.truncated);
}

#[test]
fn diagram1_transitions() {
    // g reads 2 and moves to a; a reads 0, writes 1 and stops.
    let m = builtin("diagram1").unwrap().machine();
    let g = m.word("g").unwrap();
    assert_eq!(apply(&m, &g, &[2, 0, 0]).unwrap(), vec![2, 1, 0]);
}

#[test]
fn diagram3_round_trip() {
    let b = builtin("diagram3").unwrap();
    let a = b.mealy().unwrap();
    assert_eq!(&parse(&emit(a)).unwrap(), a);
}

#[test]
fn schreier_values_in_z() {
    let d = adding_data("a");
    let endo = &d.endos[0];
    assert_eq!(schreier(&*d.model, endo, &1, 0).unwrap(), (0, 1));
    assert_eq!(schreier(&*d.model, endo, &1, 1).unwrap(), (2, 0));
    assert_eq!(schreier(&*d.model, endo, &2, 0).unwrap(), (2, 0));
    assert_eq!(schreier(&*d.model, endo, &2, 1).unwrap(), (2, 1));
}

#[test]
fn z_wreath_c2_has_degree_four() {
    let d = wreath_by_regular_data(&adding_data("a"), RegularGroup::cyclic(2), &["s"]).unwrap();
    let rep = Representation::new(d).unwrap();
    assert_eq!(rep.degree(), 4);
    let s = Automorphism::parse(&rep, "s").unwrap();
    assert!(s.pow(2).is_trivial_to_depth(10));
    let a = Automorphism::parse(&rep, "a").unwrap();
    assert!(a.commutator(&a.conj(&s)).is_trivial_to_depth(10));
    assert!(!a.pow(2).is_trivial_to_depth(10));
}

#[test]
fn concatenating_two_copies() {
    let d = concatenate(&zwrz_data(), &zwrz_data()).unwrap();
    assert_eq!(d.degree(), 6);
    let rep = Representation::new(d).unwrap();
    assert!(fcore_witness_check(&rep, 100, 20, 3).passed());
    // two base generators, one shared top generator
    assert_eq!(rep.generator_names(), ["g", "g_2", "a"]);
    let rest = WreathModel::new(2, vec![], 1);
    assert_eq!(rep.model().free_rank(), rest.free_rank());
}

#[test]
fn witnesses_in_two_models() {
    let zwrz = Representation::new(zwrz_data()).unwrap();
    let r = fcore_witness_check(&zwrz, 100, 20, 11);
    assert!(r.passed(), "{r:?}");
    let thmd = Representation::new(thmd_data(2, Ordering::Powers).unwrap()).unwrap();
    let r = fcore_witness_check(&thmd, 100, 20, 12);
    assert!(r.passed(), "{r:?}");
}

#[test]
fn first_subgroup_of_the_sequence_model() {
    let d = zomega_data(5);
    assert!(d.endos[0].contains(&vec![2, 5]));
    assert!(!d.endos[0].contains(&vec![1, 5]));
    assert_eq!(d.model.multiply(&vec![7], &vec![-7]), d.model.identity());
}

#[test]
fn brunner_sidki_base_commutation() {
    let m = builtin("brunner_sidki").unwrap().machine();
    let a = Automorphism::parse(&m, "a").unwrap();
    let at = Automorphism::parse(&m, "at").unwrap();
    assert!(at.commutator(&at.conj(&a.pow(2))).is_trivial_to_depth(10));
}

#[test]
fn fibonacci_lists() {
    let m = builtin("thmD(2)").unwrap().machine();
    let show = |n| -> Vec<String> {
        fibonacci_states(&m, n)
            .unwrap()
            .iter()
            .map(|w| w.display(m.names()).to_string())
            .collect()
    };
    assert_eq!(show(2), ["a", "a b"]);
    assert_eq!(show(4), ["a", "a b", "a a b", "a a a b b"]);
}
