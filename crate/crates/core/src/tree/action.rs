use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::word::GroupWord;

/// A group acting on the rooted `m`-tree by wreath recursion.
///
/// Each state `a` decomposes as `a = (a_0, .., a_{m-1}) σ(a)`, and acts on
/// strings by `y w -> y^σ(a) w^(a_y)`. Products compose left to right:
/// `σ(gh) = σ(g)σ(h)` and `(gh)_y = g_y h_(y^σ(g))`.
pub trait TreeAction {
    type State: Clone + Eq + Hash + Debug;

    fn degree(&self) -> usize;
    fn identity(&self) -> Self::State;
    /// Cheap identity test. Must be exact whenever it returns `true`.
    fn is_identity(&self, s: &Self::State) -> bool;
    fn multiply(&self, a: &Self::State, b: &Self::State) -> Self::State;
    fn invert(&self, a: &Self::State) -> Self::State;
    fn root_perm(&self, s: &Self::State) -> Perm;
    fn section(&self, s: &Self::State, y: usize) -> Self::State;

    fn decompose(&self, s: &Self::State) -> (Vec<Self::State>, Perm) {
        let sections = (0..self.degree()).map(|y| self.section(s, y)).collect();
        (sections, self.root_perm(s))
    }

    /// Whether `==` on states is equality of tree automorphisms.
    fn exact_equality(&self) -> bool;

    /// Named generators; words are read against this list.
    fn generators(&self) -> Vec<(String, Self::State)>;

    fn describe(&self, s: &Self::State) -> String;

    fn generator_names(&self) -> Vec<String> {
        self.generators().into_iter().map(|(n, _)| n).collect()
    }

    /// Evaluates a word over [`TreeAction::generators`].
    fn evaluate(&self, word: &GroupWord) -> Result<Self::State> {
        let gens = self.generators();
        let mut acc = self.identity();
        for sym in word.symbols() {
            let (_, g) = gens
                .get(sym.index())
                .ok_or_else(|| Error::UnknownGenerator(format!("#{}", sym.index())))?;
            let g = if sym.inverse { self.invert(g) } else { g.clone() };
            acc = self.multiply(&acc, &g);
        }
        Ok(acc)
    }

    fn parse_state(&self, text: &str) -> Result<Self::State> {
        let word = GroupWord::parse(text, &self.generator_names())?;
        self.evaluate(&word)
    }
}

macro_rules! forward_tree_action {
    ($($ty:ty),*) => {$(
        impl<T: TreeAction + ?Sized> TreeAction for $ty {
            type State = T::State;
            fn degree(&self) -> usize { (**self).degree() }
            fn identity(&self) -> Self::State { (**self).identity() }
            fn is_identity(&self, s: &Self::State) -> bool { (**self).is_identity(s) }
            fn multiply(&self, a: &Self::State, b: &Self::State) -> Self::State { (**self).multiply(a, b) }
            fn invert(&self, a: &Self::State) -> Self::State { (**self).invert(a) }
            fn root_perm(&self, s: &Self::State) -> Perm { (**self).root_perm(s) }
            fn section(&self, s: &Self::State, y: usize) -> Self::State { (**self).section(s, y) }
            fn decompose(&self, s: &Self::State) -> (Vec<Self::State>, Perm) { (**self).decompose(s) }
            fn exact_equality(&self) -> bool { (**self).exact_equality() }
            fn generators(&self) -> Vec<(String, Self::State)> { (**self).generators() }
            fn describe(&self, s: &Self::State) -> String { (**self).describe(s) }
            fn evaluate(&self, word: &GroupWord) -> Result<Self::State> { (**self).evaluate(word) }
        }
    )*};
}

forward_tree_action!(&T, Arc<T>, Box<T>);

/// An element of a [`TreeAction`], bundled with its machine.
pub struct Automorphism<'m, T: TreeAction + ?Sized> {
    machine: &'m T,
    state: T::State,
}

impl<T: TreeAction + ?Sized> Clone for Automorphism<'_, T> {
    fn clone(&self) -> Self {
        Automorphism {
            machine: self.machine,
            state: self.state.clone(),
        }
    }
}

impl<T: TreeAction + ?Sized> Debug for Automorphism<'_, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.machine.describe(&self.state))
    }
}

impl<T: TreeAction + ?Sized> PartialEq for Automorphism<'_, T> {
    /// State equality; exact only when the machine has exact equality.
    fn eq(&self, other: &Self) -> bool {
        self.state == other.state
    }
}

impl<'m, T: TreeAction + ?Sized> Automorphism<'m, T> {
    pub fn new(machine: &'m T, state: T::State) -> Self {
        Automorphism { machine, state }
    }

    pub fn identity(machine: &'m T) -> Self {
        Automorphism {
            machine,
            state: machine.identity(),
        }
    }

    pub fn parse(machine: &'m T, text: &str) -> Result<Self> {
        Ok(Automorphism {
            machine,
            state: machine.parse_state(text)?,
        })
    }

    pub fn machine(&self) -> &'m T {
        self.machine
    }

    pub fn state(&self) -> &T::State {
        &self.state
    }

    pub fn into_state(self) -> T::State {
        self.state
    }

    pub fn mul(&self, other: &Self) -> Self {
        Automorphism {
            machine: self.machine,
            state: self.machine.multiply(&self.state, &other.state),
        }
    }

    pub fn inv(&self) -> Self {
        Automorphism {
            machine: self.machine,
            state: self.machine.invert(&self.state),
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut acc = Automorphism::identity(self.machine);
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `g^-1 self g`
    pub fn conj(&self, g: &Self) -> Self {
        g.inv().mul(self).mul(g)
    }

    /// `[self, other] = self^-1 other^-1 self other`
    pub fn commutator(&self, other: &Self) -> Self {
        self.inv().mul(&other.inv()).mul(self).mul(other)
    }

    pub fn root_perm(&self) -> Perm {
        self.machine.root_perm(&self.state)
    }

    pub fn section(&self, y: usize) -> Self {
        Automorphism {
            machine: self.machine,
            state: self.machine.section(&self.state, y),
        }
    }

    pub fn apply(&self, s: &[usize]) -> Result<Vec<usize>> {
        super::ops::apply(self.machine, &self.state, s)
    }

    pub fn is_trivial_to_depth(&self, depth: usize) -> bool {
        super::ops::trivial_to_depth(self.machine, &self.state, depth)
    }

    pub fn equal_to_depth(&self, other: &Self, depth: usize) -> bool {
        super::ops::equal_to_depth(self.machine, &self.state, &other.state, depth)
    }

    pub fn find_moving_string(&self, max_depth: usize) -> Option<Vec<usize>> {
        super::ops::find_moving_string(self.machine, &self.state, max_depth)
    }

    pub fn portrait(&self, depth: usize) -> super::ops::Portrait {
        super::ops::portrait(self.machine, &self.state, depth)
    }

    pub fn states(&self, max_states: usize, sep_depth: usize) -> super::ops::StateSet<T::State> {
        super::ops::states(self.machine, &self.state, max_states, sep_depth)
    }
}
