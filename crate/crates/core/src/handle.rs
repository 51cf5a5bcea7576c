//! Type-erased tree actions addressed by generator words.

use crate::engine::{fcore_witness_check, to_mealy, to_word_machine, WitnessReport};
use crate::error::{Error, Result};
use crate::mealy::MealyAutomaton;
use crate::tree::{
    apply, equal_to_depth, find_moving_string, machine_orbit_type, portrait, states, OrbitType,
    Portrait, SelfSimilarMachine, TreeAction,
};
use crate::word::GroupWord;

/// A tree action whose elements are given as words over its generators.
pub trait ActionHandle: Send + Sync {
    fn degree(&self) -> usize;
    fn generator_names(&self) -> Vec<String>;
    fn apply(&self, word: &str, s: &[usize]) -> Result<Vec<usize>>;
    fn orbit_type(&self) -> OrbitType;
    fn portrait(&self, word: &str, depth: usize) -> Result<Portrait>;
    /// State closure, printed; the flag is set when truncated.
    fn states(&self, word: &str, max: usize, sep_depth: usize) -> Result<(Vec<String>, bool)>;
    fn moving_string(&self, word: &str, max_depth: usize) -> Result<Option<Vec<usize>>>;
    fn is_trivial(&self, word: &str, depth: usize) -> Result<bool> {
        Ok(self.moving_string(word, depth)?.is_none())
    }
    fn equal(&self, u: &str, v: &str, depth: usize) -> Result<bool>;
    /// Generator recursions as `name = (s_0, .., s_(m-1))perm`.
    fn recursion_lines(&self) -> Result<Vec<String>>;
    fn to_machine(&self) -> Result<SelfSimilarMachine>;
    fn to_mealy(&self, max_states: usize, sep_depth: usize) -> Result<MealyAutomaton>;
    /// Kernel sampling; only for actions built from a group model.
    fn witness(&self, samples: usize, max_depth: usize, seed: u64) -> Result<WitnessReport>;
}

/// Wraps any [`TreeAction`]; `show` prints states.
pub struct Handle<T: TreeAction> {
    action: T,
    show: Box<dyn Fn(&T, &T::State) -> String + Send + Sync>,
}

impl<T: TreeAction> Handle<T> {
    pub fn new(action: T, show: impl Fn(&T, &T::State) -> String + Send + Sync + 'static) -> Self {
        Handle {
            action,
            show: Box::new(show),
        }
    }

    pub fn action(&self) -> &T {
        &self.action
    }

    fn state(&self, word: &str) -> Result<T::State> {
        self.action.parse_state(word)
    }
}

pub fn machine_handle(m: SelfSimilarMachine) -> Handle<SelfSimilarMachine> {
    Handle::new(m, |m, w: &GroupWord| w.display(m.names()).to_string())
}

impl<T> ActionHandle for Handle<T>
where
    T: TreeAction + Send + Sync + Backend,
{
    fn degree(&self) -> usize {
        self.action.degree()
    }

    fn generator_names(&self) -> Vec<String> {
        self.action.generator_names()
    }

    fn apply(&self, word: &str, s: &[usize]) -> Result<Vec<usize>> {
        apply(&self.action, &self.state(word)?, s)
    }

    fn orbit_type(&self) -> OrbitType {
        machine_orbit_type(&self.action)
    }

    fn portrait(&self, word: &str, depth: usize) -> Result<Portrait> {
        Ok(portrait(&self.action, &self.state(word)?, depth))
    }

    fn states(&self, word: &str, max: usize, sep_depth: usize) -> Result<(Vec<String>, bool)> {
        let set = states(&self.action, &self.state(word)?, max, sep_depth);
        let shown = set.states.iter().map(|s| (self.show)(&self.action, s)).collect();
        Ok((shown, set.truncated))
    }

    fn moving_string(&self, word: &str, max_depth: usize) -> Result<Option<Vec<usize>>> {
        Ok(find_moving_string(&self.action, &self.state(word)?, max_depth))
    }

    fn equal(&self, u: &str, v: &str, depth: usize) -> Result<bool> {
        Ok(equal_to_depth(&self.action, &self.state(u)?, &self.state(v)?, depth))
    }

    /// Falls back to the Mealy closure when some section has no short word.
    fn recursion_lines(&self) -> Result<Vec<String>> {
        match self.to_machine() {
            Ok(m) => Ok(m.recursion_lines()),
            Err(Error::Unsupported(_)) => Ok(self.to_mealy(256, 12)?.to_machine().recursion_lines()),
            Err(e) => Err(e),
        }
    }

    fn to_machine(&self) -> Result<SelfSimilarMachine> {
        self.action.as_machine()
    }

    fn to_mealy(&self, max_states: usize, sep_depth: usize) -> Result<MealyAutomaton> {
        if let Ok(m) = self.action.as_machine() {
            if m.is_mealy() {
                return MealyAutomaton::from_machine(&m);
            }
        }
        to_mealy(&self.action, max_states, sep_depth)
    }

    fn witness(&self, samples: usize, max_depth: usize, seed: u64) -> Result<WitnessReport> {
        self.action.witness(samples, max_depth, seed)
    }
}

/// What a concrete action can offer beyond [`TreeAction`].
pub trait Backend {
    fn as_machine(&self) -> Result<SelfSimilarMachine>;

    fn witness(&self, _samples: usize, _max_depth: usize, _seed: u64) -> Result<WitnessReport> {
        Err(Error::Unsupported("random sampling needs a group model".into()))
    }
}

impl Backend for SelfSimilarMachine {
    fn as_machine(&self) -> Result<SelfSimilarMachine> {
        Ok(self.clone())
    }
}

impl<M: crate::engine::GroupModel> Backend for crate::engine::Representation<M> {
    fn as_machine(&self) -> Result<SelfSimilarMachine> {
        to_word_machine(self)
    }

    fn witness(&self, samples: usize, max_depth: usize, seed: u64) -> Result<WitnessReport> {
        Ok(fcore_witness_check(self, samples, max_depth, seed))
    }
}
