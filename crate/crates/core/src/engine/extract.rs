use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::mealy::{MealyAutomaton, MealyState};
use crate::tree::{equal_to_depth, Recursion, SelfSimilarMachine, TreeAction};
use crate::word::{GenSymbol, GroupWord};

const WORD_BUDGET: usize = 200_000;

/// Short words over a machine's generators, keyed by the state they
/// evaluate to. Positive words come first (by length, then generator
/// order), then words with inverses; the first word found for a state
/// names it. Only meaningful for machines with exact equality.
pub struct WordDictionary<S> {
    names: Vec<String>,
    words: HashMap<S, GroupWord>,
}

impl<S: Clone + Eq + std::hash::Hash> WordDictionary<S> {
    pub fn new<T: TreeAction<State = S> + ?Sized>(mach: &T, positive_len: usize, signed_len: usize) -> Self {
        let gens = mach.generators();
        let names = gens.iter().map(|(n, _)| n.clone()).collect();
        let mut words = HashMap::new();
        words.insert(mach.identity(), GroupWord::identity());
        let pos: Vec<(GenSymbol, S)> = gens
            .iter()
            .enumerate()
            .map(|(i, (_, g))| (GenSymbol::new(i, false), g.clone()))
            .collect();
        let mut signed = pos.clone();
        signed.extend(
            gens.iter()
                .enumerate()
                .map(|(i, (_, g))| (GenSymbol::new(i, true), mach.invert(g))),
        );
        for (alphabet, max_len) in [(&pos, positive_len), (&signed, signed_len)] {
            let mut layer = vec![(Vec::<GenSymbol>::new(), mach.identity())];
            for _ in 0..max_len {
                if layer.len() * alphabet.len() > WORD_BUDGET {
                    break;
                }
                let mut next = Vec::with_capacity(layer.len() * alphabet.len());
                for (w, x) in &layer {
                    for (sym, g) in alphabet {
                        if w.last() == Some(&sym.inv()) {
                            continue;
                        }
                        let mut w2 = w.clone();
                        w2.push(*sym);
                        let y = mach.multiply(x, g);
                        words
                            .entry(y.clone())
                            .or_insert_with(|| GroupWord::from_symbols(w2.iter().copied()));
                        next.push((w2, y));
                    }
                }
                layer = next;
            }
        }
        WordDictionary { names, words }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn word(&self, g: &S) -> Option<&GroupWord> {
        self.words.get(g)
    }
}

/// The machine over the generators whose sections are the short words
/// naming each section. Fails if some section has no short word.
pub fn to_word_machine<T: TreeAction + ?Sized>(mach: &T) -> Result<SelfSimilarMachine> {
    if !mach.exact_equality() {
        return Err(Error::Unsupported("word extraction needs exact equality".into()));
    }
    let dict = WordDictionary::new(mach, 6, 4);
    let mut recursion = Vec::new();
    for (name, g) in mach.generators() {
        let (sections, perm) = mach.decompose(&g);
        let sections = sections
            .iter()
            .enumerate()
            .map(|(y, h)| {
                dict.word(h).cloned().ok_or_else(|| {
                    Error::Unsupported(format!(
                        "section of `{name}` at {y} is not a short word: {}",
                        mach.describe(h)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        recursion.push(Recursion { sections, perm });
    }
    SelfSimilarMachine::new(mach.degree(), dict.names().to_vec(), recursion)
}

/// The Mealy automaton on the state closure of the generators. Generators
/// keep their names; other states are named `q1, q2, ..`. States are merged
/// by `==` under exact equality, else by agreement to `sep_depth`.
pub fn to_mealy<T: TreeAction + ?Sized>(
    mach: &T,
    max_states: usize,
    sep_depth: usize,
) -> Result<MealyAutomaton> {
    let exact = mach.exact_equality();
    let gens = mach.generators();
    let mut order: Vec<T::State> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<T::State, Option<usize>> = HashMap::new();
    let mut fresh = 0;
    let mut add = |g: T::State, name: Option<String>, order: &mut Vec<T::State>, names: &mut Vec<String>| {
        if let Some(&k) = index.get(&g) {
            return k;
        }
        let found = if mach.is_identity(&g) {
            Some(None)
        } else if exact {
            None
        } else if equal_to_depth(mach, &g, &mach.identity(), sep_depth) {
            Some(None)
        } else {
            order
                .iter()
                .position(|c| equal_to_depth(mach, c, &g, sep_depth))
                .map(Some)
        };
        if let Some(k) = found {
            index.insert(g, k);
            return k;
        }
        let name = name.unwrap_or_else(|| loop {
            fresh += 1;
            let n = format!("q{fresh}");
            if !gens.iter().any(|(g, _)| *g == n) {
                break n;
            }
        });
        index.insert(g.clone(), Some(order.len()));
        order.push(g);
        names.push(name);
        Some(order.len() - 1)
    };
    for (name, g) in &gens {
        add(g.clone(), Some(name.clone()), &mut order, &mut names);
    }
    let mut states: Vec<MealyState> = Vec::new();
    let mut k = 0;
    while k < order.len() {
        if order.len() > max_states {
            return Err(Error::NotFiniteState(max_states));
        }
        let (sections, perm) = mach.decompose(&order[k]);
        let next = sections
            .into_iter()
            .map(|h| add(h, None, &mut order, &mut names))
            .collect();
        states.push(MealyState {
            name: names[k].clone(),
            output: perm,
            next,
        });
        k += 1;
    }
    if order.len() > max_states {
        return Err(Error::NotFiniteState(max_states));
    }
    MealyAutomaton::new(mach.degree(), states)
}
