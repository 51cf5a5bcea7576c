use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use selfsim::engine::{schreier, GData, GroupModel, Representation};
use selfsim::mealy::{builtin, emit, parse, to_dot, MealyAutomaton, MealyState};
use selfsim::models::{lamplighter_data, prop31_data, thmd_data, zwrz_wr_c2_data, Ordering};
use selfsim::tree::{apply, equal_to_depth_across, TreeAction};
use selfsim::{GenSymbol, GroupWord, Perm};

fn word(gens: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec((0..gens, any::<bool>()), 0..10)
        .prop_map(|v| GroupWord::from_symbols(v.into_iter().map(|(g, i)| GenSymbol::new(g, i))))
}

fn string(m: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..m, 0..=max)
}

/// `θ(gh, j) = θ(g, j) θ(h, k)` where `t_j g` lies in coset `k`.
fn cocycle<M: GroupModel>(d: &GData<M>, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = &*d.model;
    let (g, h) = (m.random(&mut rng), m.random(&mut rng));
    let gh = m.multiply(&g, &h);
    for endo in &d.endos {
        for j in 0..endo.index() {
            let (tg, k) = schreier(m, endo, &g, j).unwrap();
            let (th, l) = schreier(m, endo, &h, k).unwrap();
            let (tgh, l2) = schreier(m, endo, &gh, j).unwrap();
            prop_assert_eq!(l, l2);
            prop_assert!(tgh == m.multiply(&tg, &th));
        }
    }
    Ok(())
}

/// The engine's recursion of a product agrees with the product of the
/// recursions.
fn wreath_law<M: GroupModel>(d: GData<M>, seed: u64) -> Result<(), TestCaseError> {
    let rep = Representation::new_unchecked(d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rep.model();
    let (g, h) = (m.random(&mut rng), m.random(&mut rng));
    let gh = rep.multiply(&g, &h);
    let pg = rep.root_perm(&g);
    prop_assert_eq!(rep.root_perm(&gh), pg.then(&rep.root_perm(&h)));
    for y in 0..rep.degree() {
        let want = rep.multiply(&rep.section(&g, y), &rep.section(&h, pg.image(y)));
        prop_assert!(rep.section(&gh, y) == want);
    }
    let gi = rep.invert(&g);
    prop_assert!(rep.is_identity(&rep.multiply(&g, &gi)));
    Ok(())
}

fn random_automaton(seed: u64) -> MealyAutomaton {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = 2 + (seed % 3) as usize;
    let n = 1 + (seed / 3 % 4) as usize;
    let states = (0..n)
        .map(|i| {
            let mut images: Vec<usize> = (0..m).collect();
            images.shuffle(&mut rng);
            let next = (0..m)
                .map(|_| {
                    let t = rand::Rng::gen_range(&mut rng, 0..=n);
                    (t < n).then_some(t)
                })
                .collect();
            MealyState {
                name: format!("q{i}"),
                output: Perm::from_images(images).unwrap(),
                next,
            }
        })
        .collect();
    MealyAutomaton::new(m, states).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn schreier_cocycle(seed in any::<u64>()) {
        cocycle(&prop31_data(2, 2).unwrap(), seed)?;
        cocycle(&thmd_data(3, Ordering::Powers).unwrap(), seed)?;
        cocycle(&thmd_data(3, Ordering::Inverses).unwrap(), seed)?;
        cocycle(&zwrz_wr_c2_data(), seed)?;
        cocycle(&lamplighter_data(vec![2, 3]).unwrap(), seed)?;
    }

    #[test]
    fn engine_recursion_is_multiplicative(seed in any::<u64>()) {
        wreath_law(prop31_data(2, 2).unwrap(), seed)?;
        wreath_law(thmd_data(2, Ordering::Powers).unwrap(), seed)?;
        wreath_law(zwrz_wr_c2_data(), seed)?;
        wreath_law(lamplighter_data(vec![2]).unwrap(), seed)?;
    }

    #[test]
    fn machine_action_is_a_right_action(u in word(2), v in word(2), s in string(3, 10)) {
        let m = builtin("diagram1").unwrap().machine();
        let uv = apply(&m, &u.multiply(&v), &s).unwrap();
        prop_assert_eq!(uv, apply(&m, &v, &apply(&m, &u, &s).unwrap()).unwrap());
        let back = apply(&m, &u.inverse(), &apply(&m, &u, &s).unwrap()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn engine_agrees_with_literal_machine(w in word(3), p in prop::sample::select(vec![2usize, 3])) {
        let lit = builtin(&format!("thmD({p})")).unwrap().machine();
        let rep = Representation::new(thmd_data(p, Ordering::Powers).unwrap()).unwrap();
        let g = rep.evaluate(&w).unwrap();
        prop_assert!(equal_to_depth_across(&lit, &w, &rep, &g, 10));
    }

    #[test]
    fn automaton_text_round_trip(seed in any::<u64>()) {
        let a = random_automaton(seed);
        let text = emit(&a);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(emit(&back), text);
        prop_assert_eq!(to_dot(&back), to_dot(&a));
    }
}
