use crate::error::{Error, Result};
use crate::perm::Perm;

use super::action::TreeAction;
use super::machine::{Recursion, SelfSimilarMachine};

/// The `k`-inflation of an action: letters of the new alphabet are blocks of
/// `k` old letters, encoded big-endian (`y_1 .. y_k -> y_1 m^(k-1) + .. + y_k`).
#[derive(Clone, Debug)]
pub struct Inflated<T> {
    inner: T,
    k: usize,
    degree: usize,
}

impl<T: TreeAction> Inflated<T> {
    pub fn new(inner: T, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadParams("inflation needs k >= 1".into()));
        }
        let degree = inner
            .degree()
            .checked_pow(k as u32)
            .filter(|&d| d <= 1 << 20)
            .ok_or_else(|| Error::BadParams("inflated alphabet too large".into()))?;
        Ok(Inflated { inner, k, degree })
    }

    pub fn inner(&self) -> &T {
        &self.inner
    }

    pub fn decode(&self, letter: usize) -> Vec<usize> {
        let m = self.inner.degree();
        let mut s = vec![0; self.k];
        let mut x = letter;
        for slot in s.iter_mut().rev() {
            *slot = x % m;
            x /= m;
        }
        s
    }

    pub fn encode(&self, s: &[usize]) -> usize {
        let m = self.inner.degree();
        s.iter().fold(0, |acc, &y| acc * m + y)
    }
}

impl<T: TreeAction> TreeAction for Inflated<T> {
    type State = T::State;

    fn degree(&self) -> usize {
        self.degree
    }

    fn identity(&self) -> T::State {
        self.inner.identity()
    }

    fn is_identity(&self, s: &T::State) -> bool {
        self.inner.is_identity(s)
    }

    fn multiply(&self, a: &T::State, b: &T::State) -> T::State {
        self.inner.multiply(a, b)
    }

    fn invert(&self, a: &T::State) -> T::State {
        self.inner.invert(a)
    }

    fn root_perm(&self, s: &T::State) -> Perm {
        let images = (0..self.degree)
            .map(|b| {
                let img = super::ops::apply(&self.inner, s, &self.decode(b))
                    .expect("decoded letters are in range");
                self.encode(&img)
            })
            .collect();
        Perm::from_images(images).expect("tree automorphisms permute each level")
    }

    fn section(&self, s: &T::State, y: usize) -> T::State {
        self.decode(y)
            .into_iter()
            .fold(s.clone(), |st, letter| self.inner.section(&st, letter))
    }

    fn exact_equality(&self) -> bool {
        self.inner.exact_equality()
    }

    fn generators(&self) -> Vec<(String, T::State)> {
        self.inner.generators()
    }

    fn describe(&self, s: &T::State) -> String {
        self.inner.describe(s)
    }
}

/// `k`-inflation of a word machine, as a word machine with the same
/// generators whose sections are the depth-`k` sections.
pub fn inflate(mach: &SelfSimilarMachine, k: usize) -> Result<SelfSimilarMachine> {
    let inf = Inflated::new(mach, k)?;
    let recursion = inf
        .generators()
        .into_iter()
        .map(|(_, g)| {
            let (sections, perm) = inf.decompose(&g);
            Recursion { sections, perm }
        })
        .collect();
    SelfSimilarMachine::new(inf.degree(), mach.names().to_vec(), recursion)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inflate_once_is_unchanged() {
        let m = SelfSimilarMachine::from_text(2, &[("a", &["e", "a"], Perm::cycle(2))]).unwrap();
        assert_eq!(inflate(&m, 1).unwrap(), m);
        assert!(inflate(&m, 0).is_err());
    }

    #[test]
    fn adding_machine_two_inflation() {
        // a acts on pairs as +1 on the reversed base-2 digits.
        let m = SelfSimilarMachine::from_text(2, &[("a", &["e", "a"], Perm::cycle(2))]).unwrap();
        let inf = inflate(&m, 2).unwrap();
        let rec = inf.recursion(0);
        assert_eq!(rec.perm.to_string(), "(0 2 1 3)");
        let names = inf.names().to_vec();
        let secs: Vec<String> = rec.sections.iter().map(|w| w.display(&names).to_string()).collect();
        assert_eq!(secs, vec!["e", "e", "e", "a"]);
    }
}
