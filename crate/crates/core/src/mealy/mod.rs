//! Finite invertible Mealy automata.

mod builtins;
mod dot;
mod text;

pub use builtins::{builtin, builtin_names, Builtin};
pub(crate) use builtins::{is_prime, split_call};
pub use dot::to_dot;
pub use text::{emit, parse};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::tree::{Recursion, SelfSimilarMachine};
use crate::word::{is_identifier, GroupWord};

/// A non-identity state. `next[y] == None` means the transition goes to the
/// identity state `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MealyState {
    pub name: String,
    pub output: Perm,
    pub next: Vec<Option<usize>>,
}

/// An invertible Mealy automaton. The identity state `e` is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MealyAutomaton {
    alphabet_size: usize,
    states: Vec<MealyState>,
}

impl MealyAutomaton {
    pub fn new(alphabet_size: usize, states: Vec<MealyState>) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::InvalidMachine("alphabet must be non-empty".into()));
        }
        let mut names = std::collections::HashSet::new();
        for q in &states {
            if !is_identifier(&q.name) || q.name == "e" {
                return Err(Error::InvalidMachine(format!("bad state name `{}`", q.name)));
            }
            if !names.insert(q.name.as_str()) {
                return Err(Error::InvalidMachine(format!("duplicate state `{}`", q.name)));
            }
            if q.output.degree() != alphabet_size || q.next.len() != alphabet_size {
                return Err(Error::InvalidMachine(format!(
                    "state `{}` is not defined on {alphabet_size} letters",
                    q.name
                )));
            }
            if q.next.iter().flatten().any(|&t| t >= states.len()) {
                return Err(Error::InvalidMachine(format!(
                    "state `{}` has a dangling transition",
                    q.name
                )));
            }
        }
        Ok(MealyAutomaton {
            alphabet_size,
            states,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn states(&self) -> &[MealyState] {
        &self.states
    }

    pub fn state_names(&self) -> Vec<String> {
        self.states.iter().map(|q| q.name.clone()).collect()
    }

    /// One generator per non-identity state.
    pub fn to_machine(&self) -> SelfSimilarMachine {
        let recursion = self
            .states
            .iter()
            .map(|q| Recursion {
                sections: q
                    .next
                    .iter()
                    .map(|t| t.map_or_else(GroupWord::identity, GroupWord::generator))
                    .collect(),
                perm: q.output.clone(),
            })
            .collect();
        SelfSimilarMachine::new(self.alphabet_size, self.state_names(), recursion)
            .expect("automaton invariants imply machine invariants")
    }

    /// The automaton of a machine whose sections are all single generators
    /// or the identity.
    pub fn from_machine(mach: &SelfSimilarMachine) -> Result<Self> {
        if !mach.is_mealy() {
            return Err(Error::Unsupported(
                "machine has sections that are not single states".into(),
            ));
        }
        let states = (0..mach.generator_count())
            .map(|g| {
                let rec = mach.recursion(g);
                MealyState {
                    name: mach.names()[g].clone(),
                    output: rec.perm.clone(),
                    next: rec
                        .sections
                        .iter()
                        .map(|w| w.symbols().first().map(|s| s.index()))
                        .collect(),
                }
            })
            .collect();
        MealyAutomaton::new(mach.alphabet_size(), states)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_only_automaton_has_no_generators() {
        let a = MealyAutomaton::new(2, vec![]).unwrap();
        assert_eq!(a.to_machine().generator_count(), 0);
    }

    #[test]
    fn machine_round_trip() {
        let Builtin::Mealy(a) = builtin("diagram1").unwrap() else {
            panic!("diagram1 is a Mealy automaton");
        };
        assert_eq!(MealyAutomaton::from_machine(&a.to_machine()).unwrap(), a);
    }

    #[test]
    fn rejects_dangling_and_duplicates() {
        let q = |name: &str, next| MealyState {
            name: name.into(),
            output: Perm::identity(2),
            next,
        };
        assert!(MealyAutomaton::new(2, vec![q("a", vec![Some(1), None])]).is_err());
        assert!(MealyAutomaton::new(2, vec![q("a", vec![None, None]), q("a", vec![None, None])]).is_err());
        assert!(MealyAutomaton::new(2, vec![q("e", vec![None, None])]).is_err());
    }
}
