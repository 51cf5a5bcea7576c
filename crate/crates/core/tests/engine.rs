use selfsim::engine::{
    concatenate, fcore_witness_check, to_mealy, to_word_machine, GroupModel, Representation,
};
use selfsim::mealy::builtin;
use selfsim::models::{
    adding_data, lamp_data, lamplighter_data, prop31_data, thmd_data, zomega_data, zwrz_data,
    zwrz_wr_c2_data, Ordering,
};
use selfsim::tree::{machine_orbit_type, TreeAction};

fn lines<M: GroupModel>(rep: &Representation<M>) -> Vec<String> {
    to_word_machine(rep).unwrap().recursion_lines()
}

#[test]
fn adding_machine_from_z() {
    let rep = Representation::new(adding_data("a")).unwrap();
    assert_eq!(lines(&rep), vec!["a = (e, a)(0 1)"]);
}

#[test]
fn zomega_generators() {
    let rep = Representation::new(zomega_data(5)).unwrap();
    assert_eq!(
        lines(&rep),
        vec![
            "a1 = (e, a1, e)(0 1)",
            "a2 = (a2, a2, a1)",
            "a3 = (a3, a3, a2)",
            "a4 = (a4, a4, a3)",
            "a5 = (a5, a5, a4)",
        ]
    );
    assert_eq!(machine_orbit_type(&rep).to_string(), "(2,1)");
}

#[test]
fn prop31_matches_builtin() {
    for (l, d) in [(2, 2), (1, 1), (3, 2), (2, 3)] {
        let rep = Representation::new(prop31_data(l, d).unwrap()).unwrap();
        let want = builtin(&format!("prop31({l},{d})")).unwrap().machine().recursion_lines();
        assert_eq!(lines(&rep), want, "l={l} d={d}");
    }
}

#[test]
fn thmd_engine_matches_literal_tuples() {
    for p in [2, 3, 5] {
        let rep = Representation::new(thmd_data(p, Ordering::Powers).unwrap()).unwrap();
        let want = builtin(&format!("thmD({p})")).unwrap().machine().recursion_lines();
        assert_eq!(lines(&rep), want, "p={p}");
        assert_eq!(machine_orbit_type(&rep).to_string(), format!("({p},1)"));
    }
}

#[test]
fn thmd_inverse_ordering() {
    let rep = Representation::new(thmd_data(3, Ordering::Inverses).unwrap()).unwrap();
    assert_eq!(
        lines(&rep),
        vec!["s = (e, e, e, s)(0 2 1)", "a = (a, a s s, a s, a b)", "b = (e, e, e, a)"]
    );
    assert_eq!(machine_orbit_type(&rep).to_string(), "(3,1)");
}

#[test]
fn zwrz_wr_c2_generators() {
    let rep = Representation::new(zwrz_wr_c2_data()).unwrap();
    assert_eq!(rep.degree(), 4);
    assert_eq!(
        lines(&rep),
        vec![
            "s = (e, e, e, e)(0 2)(1 3)",
            "g = (g, e, s a s, s a s)",
            "a = (e, a, e, e)(0 1)",
        ]
    );
}

#[test]
fn lamplighter_shape() {
    let rep = Representation::new(lamplighter_data(vec![2]).unwrap()).unwrap();
    assert_eq!(rep.degree(), 5);
    assert_eq!(machine_orbit_type(&rep).to_string(), "(4,1)");
    assert_eq!(
        lines(&rep),
        vec!["b = (e, b, e, b, b)(0 2)(1 3)", "z = (e, z, e, b z b, z)(0 1)(2 3)"]
    );
    let raw = Representation::new(lamp_data(vec![2]).unwrap()).unwrap();
    assert_eq!(raw.degree(), 5);
}

#[test]
fn concatenation_of_lamplighter_and_zwrz() {
    let d = concatenate(&lamplighter_data(vec![2]).unwrap(), &zwrz_data()).unwrap();
    let rep = Representation::new(d).unwrap();
    assert_eq!(rep.degree(), 8);
    assert_eq!(
        lines(&rep),
        vec![
            "b = (e, b, e, b, b, e, e, e)(0 2)(1 3)",
            "g = (e, e, e, e, e, g, e, z)",
            "z = (e, z, e, b z b, z, e, z, e)(0 1)(2 3)(5 6)",
        ]
    );
    let a = to_mealy(&rep, 64, 12).unwrap();
    assert_eq!(a.state_names(), ["b", "g", "z", "q1", "q2", "q3"]);
    let r = fcore_witness_check(&rep, 100, 20, 1);
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.nontrivial, 99);
}

#[test]
fn thmd_orderings_against_literal_tuples() {
    use selfsim::tree::{equal_to_depth_across, Automorphism};
    for p in [2usize, 3] {
        let lit = builtin(&format!("thmD({p})")).unwrap().machine();
        for ordering in [Ordering::Powers, Ordering::Inverses] {
            let rep = Representation::new(thmd_data(p, ordering).unwrap()).unwrap();
            let s = Automorphism::parse(&rep, "s").unwrap();
            let a = Automorphism::parse(&rep, "a").unwrap();
            let b = Automorphism::parse(&rep, "b").unwrap();
            assert!(s.pow(p as i64).is_trivial_to_depth(12));
            assert!(a.commutator(&b).is_trivial_to_depth(10));
            let c = s.conj(&a);
            assert!(c.commutator(&s).is_trivial_to_depth(8));
            let agree = ["s", "a", "b"].iter().all(|g| {
                let w = lit.word(g).unwrap();
                let x = rep.parse_state(g).unwrap();
                equal_to_depth_across(&lit, &w, &rep, &x, 12)
            });
            // Only the powers ordering reproduces the literal tuples once p > 2.
            let expected = matches!(ordering, Ordering::Powers) || p == 2;
            assert_eq!(agree, expected, "p={p} {ordering:?}");
        }
    }
}
