use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::word::{is_identifier, GroupWord};

use super::action::TreeAction;

/// Wreath recursion of one generator: its sections and root permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recursion {
    pub sections: Vec<GroupWord>,
    pub perm: Perm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Entry {
    rec: Recursion,
    inv_perm: Perm,
    // (s^-1)_y = (s_(y^σ^-1))^-1
    inv_sections: Vec<GroupWord>,
}

/// A self-similar machine given by the wreath recursion of finitely many
/// named generators. States are freely reduced words over the generators;
/// sections of products and inverses are computed symbolically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfSimilarMachine {
    alphabet_size: usize,
    names: Vec<String>,
    entries: Vec<Entry>,
}

impl SelfSimilarMachine {
    pub fn new(
        alphabet_size: usize,
        names: Vec<String>,
        recursion: Vec<Recursion>,
    ) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::InvalidMachine("alphabet must be non-empty".into()));
        }
        if names.len() != recursion.len() {
            return Err(Error::InvalidMachine(format!(
                "{} names but {} recursion entries",
                names.len(),
                recursion.len()
            )));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !is_identifier(n) || n == "e" {
                return Err(Error::InvalidMachine(format!("bad generator name `{n}`")));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidMachine(format!("duplicate generator `{n}`")));
            }
        }
        let mut entries = Vec::with_capacity(recursion.len());
        for (name, rec) in names.iter().zip(recursion) {
            if rec.perm.degree() != alphabet_size || rec.sections.len() != alphabet_size {
                return Err(Error::InvalidMachine(format!(
                    "generator `{name}` is not defined on {alphabet_size} letters"
                )));
            }
            if let Some(g) = rec.sections.iter().filter_map(|w| w.max_generator()).max() {
                if g >= names.len() {
                    return Err(Error::InvalidMachine(format!(
                        "generator `{name}` refers to undeclared state #{g}"
                    )));
                }
            }
            let inv_perm = rec.perm.inverse();
            let inv_sections = (0..alphabet_size)
                .map(|y| rec.sections[inv_perm.image(y)].inverse())
                .collect();
            entries.push(Entry {
                rec,
                inv_perm,
                inv_sections,
            });
        }
        Ok(SelfSimilarMachine {
            alphabet_size,
            names,
            entries,
        })
    }

    /// Builds a machine from textual words, e.g.
    /// `("a", &["e", "a"], Perm::cycle(2))` for the adding machine.
    pub fn from_text(alphabet_size: usize, gens: &[(&str, &[&str], Perm)]) -> Result<Self> {
        let names: Vec<String> = gens.iter().map(|(n, _, _)| n.to_string()).collect();
        let mut recursion = Vec::with_capacity(gens.len());
        for (_, sections, perm) in gens {
            let sections = sections
                .iter()
                .map(|s| GroupWord::parse(s, &names))
                .collect::<Result<Vec<_>>>()?;
            recursion.push(Recursion {
                sections,
                perm: perm.clone(),
            });
        }
        SelfSimilarMachine::new(alphabet_size, names, recursion)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn recursion(&self, gen: usize) -> &Recursion {
        &self.entries[gen].rec
    }

    pub fn recursion_of(&self, name: &str) -> Option<&Recursion> {
        self.index_of(name).map(|i| self.recursion(i))
    }

    pub fn word(&self, text: &str) -> Result<GroupWord> {
        GroupWord::parse(text, &self.names)
    }

    /// Whether every section is a single generator or the identity.
    pub fn is_mealy(&self) -> bool {
        self.entries.iter().all(|e| {
            e.rec
                .sections
                .iter()
                .all(|w| w.is_empty() || (w.len() == 1 && !w.symbols()[0].inverse))
        })
    }

    /// `name = (s_0, .., s_{m-1})cycles`, one line per generator.
    pub fn recursion_lines(&self) -> Vec<String> {
        (0..self.names.len())
            .map(|g| {
                let rec = self.recursion(g);
                let sections: Vec<String> = rec
                    .sections
                    .iter()
                    .map(|w| w.display(&self.names).to_string())
                    .collect();
                format_recursion(&self.names[g], &sections, &rec.perm)
            })
            .collect()
    }
}

pub(crate) fn format_recursion(name: &str, sections: &[String], perm: &Perm) -> String {
    let mut line = format!("{name} = ({})", sections.join(", "));
    if !perm.is_identity() {
        line.push_str(&perm.to_string());
    }
    line
}

impl TreeAction for SelfSimilarMachine {
    type State = GroupWord;

    fn degree(&self) -> usize {
        self.alphabet_size
    }

    fn identity(&self) -> GroupWord {
        GroupWord::identity()
    }

    fn is_identity(&self, s: &GroupWord) -> bool {
        s.is_empty()
    }

    fn multiply(&self, a: &GroupWord, b: &GroupWord) -> GroupWord {
        a.multiply(b)
    }

    fn invert(&self, a: &GroupWord) -> GroupWord {
        a.inverse()
    }

    fn root_perm(&self, s: &GroupWord) -> Perm {
        let m = self.alphabet_size;
        let mut images: Vec<usize> = (0..m).collect();
        for sym in s.symbols() {
            let e = &self.entries[sym.index()];
            let p = if sym.inverse { &e.inv_perm } else { &e.rec.perm };
            for i in images.iter_mut() {
                *i = p.image(*i);
            }
        }
        Perm::from_images(images).expect("composite of permutations")
    }

    fn section(&self, s: &GroupWord, y: usize) -> GroupWord {
        let mut c = y;
        let mut out = GroupWord::identity();
        for sym in s.symbols() {
            let e = &self.entries[sym.index()];
            if sym.inverse {
                out.append(&e.inv_sections[c]);
                c = e.inv_perm.image(c);
            } else {
                out.append(&e.rec.sections[c]);
                c = e.rec.perm.image(c);
            }
        }
        out
    }

    fn exact_equality(&self) -> bool {
        false
    }

    fn generators(&self) -> Vec<(String, GroupWord)> {
        self.names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), GroupWord::generator(i)))
            .collect()
    }

    fn describe(&self, s: &GroupWord) -> String {
        s.display(&self.names).to_string()
    }

    fn generator_names(&self) -> Vec<String> {
        self.names.clone()
    }

    fn evaluate(&self, word: &GroupWord) -> Result<GroupWord> {
        if let Some(g) = word.max_generator() {
            if g >= self.names.len() {
                return Err(Error::UnknownGenerator(format!("#{g}")));
            }
        }
        Ok(word.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adding() -> SelfSimilarMachine {
        SelfSimilarMachine::from_text(2, &[("a", &["e", "a"], Perm::cycle(2))]).unwrap()
    }

    #[test]
    fn adding_machine_root_and_sections() {
        let m = adding();
        let a = m.word("a").unwrap();
        assert_eq!(m.root_perm(&a).to_string(), "(0 1)");
        assert!(m.root_perm(&m.word("a a").unwrap()).is_identity());
        assert!(m.root_perm(&GroupWord::identity()).is_identity());
        assert!(m.section(&a, 0).is_empty());
        assert_eq!(m.section(&a, 1), a);
        assert!(m.section(&GroupWord::identity(), 1).is_empty());
    }

    #[test]
    fn inverse_sections_follow_the_inverse_rule() {
        let m = adding();
        let ai = m.word("a^-1").unwrap();
        // a^-1 = (a^-1, e)(0 1)
        assert_eq!(m.section(&ai, 0), ai);
        assert!(m.section(&ai, 1).is_empty());
    }

    #[test]
    fn rejects_bad_machines() {
        assert!(SelfSimilarMachine::from_text(2, &[("a", &["e"], Perm::cycle(2))]).is_err());
        assert!(SelfSimilarMachine::from_text(2, &[("a", &["e", "b"], Perm::cycle(2))]).is_err());
        assert!(SelfSimilarMachine::from_text(2, &[("e", &["e", "e"], Perm::cycle(2))]).is_err());
        assert!(
            SelfSimilarMachine::from_text(2, &[("a", &["e", "a"], Perm::identity(3))]).is_err()
        );
    }

    #[test]
    fn recursion_lines_use_tuple_notation() {
        assert_eq!(adding().recursion_lines(), vec!["a = (e, a)(0 1)"]);
        assert!(adding().is_mealy());
    }
}
