//! Freely reduced words over a finite list of named generators.
//!
//! Text syntax: whitespace separated tokens, each `gen` or `gen^-1`. When
//! parsing, `gen^k` for any non-zero integer `k` and the token `e` (the
//! identity) are also accepted; printing always uses the strict form.

use std::fmt;

use crate::error::{Error, Result};

/// A generator index together with a sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GenSymbol {
    pub gen: u32,
    pub inverse: bool,
}

impl GenSymbol {
    pub fn new(gen: usize, inverse: bool) -> Self {
        GenSymbol {
            gen: gen as u32,
            inverse,
        }
    }

    pub fn index(self) -> usize {
        self.gen as usize
    }

    pub fn inv(self) -> Self {
        GenSymbol {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: GenSymbol) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupWord {
    symbols: Vec<GenSymbol>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn generator(gen: usize) -> Self {
        GroupWord {
            symbols: vec![GenSymbol::new(gen, false)],
        }
    }

    /// Reduces `symbols` freely.
    pub fn from_symbols<I: IntoIterator<Item = GenSymbol>>(symbols: I) -> Self {
        let mut out = GroupWord::identity();
        for s in symbols {
            out.push(s);
        }
        out
    }

    fn push(&mut self, s: GenSymbol) {
        match self.symbols.last() {
            Some(&last) if last.cancels(s) => {
                self.symbols.pop();
            }
            _ => self.symbols.push(s),
        }
    }

    pub fn symbols(&self) -> &[GenSymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Concatenation followed by free reduction.
    pub fn multiply(&self, other: &GroupWord) -> GroupWord {
        let mut out = self.clone();
        out.symbols.reserve(other.len());
        for &s in &other.symbols {
            out.push(s);
        }
        out
    }

    /// In-place `self = self * other`.
    pub fn append(&mut self, other: &GroupWord) {
        for &s in &other.symbols {
            self.push(s);
        }
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            symbols: self.symbols.iter().rev().map(|s| s.inv()).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> GroupWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = GroupWord::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// `g^-1 self g`, the right conjugate.
    pub fn conjugate(&self, g: &GroupWord) -> GroupWord {
        g.inverse().multiply(self).multiply(g)
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &GroupWord, b: &GroupWord) -> GroupWord {
        a.inverse()
            .multiply(&b.inverse())
            .multiply(a)
            .multiply(b)
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.symbols.iter().map(|s| s.index()).max()
    }

    /// Parses a word against the generator names `names`.
    pub fn parse(text: &str, names: &[String]) -> Result<GroupWord> {
        let mut out = GroupWord::identity();
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                None => (token, 1i64),
                Some((name, exp)) => {
                    let exp: i64 = exp
                        .parse()
                        .map_err(|_| Error::WordSyntax(format!("bad exponent in `{token}`")))?;
                    if exp == 0 {
                        return Err(Error::WordSyntax(format!("zero exponent in `{token}`")));
                    }
                    (name, exp)
                }
            };
            if !is_identifier(name) {
                return Err(Error::WordSyntax(format!("bad generator name `{name}`")));
            }
            if name == "e" && !names.iter().any(|n| n == "e") {
                continue;
            }
            let gen = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            let sym = GenSymbol::new(gen, exp < 0);
            for _ in 0..exp.unsigned_abs() {
                out.push(sym);
            }
        }
        Ok(out)
    }

    /// Strict text form; the identity prints as `e`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        for (k, s) in self.symbols.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "g{}", s.gen)?;
            if s.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

pub struct WordDisplay<'a> {
    word: &'a GroupWord,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        for (k, s) in self.word.symbols.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            match self.names.get(s.index()) {
                Some(n) => f.write_str(n)?,
                None => write!(f, "g{}", s.gen)?,
            }
            if s.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// `[A-Za-z_][A-Za-z0-9_]*`
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names() -> Vec<String> {
        vec!["a".into(), "b".into(), "g".into()]
    }

    fn w(text: &str) -> GroupWord {
        GroupWord::parse(text, &names()).unwrap()
    }

    #[test]
    fn multiply_examples() {
        assert!(w("a").multiply(&w("a^-1")).is_identity());
        assert_eq!(GroupWord::identity().multiply(&w("g")), w("g"));
        assert_eq!(w("a b").multiply(&w("b^-1 a")), w("a a"));
    }

    #[test]
    fn inverse_examples() {
        assert!(GroupWord::identity().inverse().is_identity());
        assert_eq!(w("a").inverse(), w("a^-1"));
        assert_eq!(w("a b^-1").inverse(), w("b a^-1"));
    }

    #[test]
    fn parse_and_print() {
        let n = names();
        assert_eq!(w("a^2 b^-2").display(&n).to_string(), "a a b^-1 b^-1");
        assert_eq!(w("e").display(&n).to_string(), "e");
        assert_eq!(w("").display(&n).to_string(), "e");
        assert_eq!(w("a a^-1 b").display(&n).to_string(), "b");
        assert!(matches!(
            GroupWord::parse("x", &n),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(GroupWord::parse("a^", &n).is_err());
        assert!(GroupWord::parse("a^0", &n).is_err());
        assert!(GroupWord::parse("1a", &n).is_err());
    }

    #[test]
    fn commutator_of_generator_with_itself_is_trivial() {
        assert!(GroupWord::commutator(&w("a"), &w("a")).is_identity());
        assert_eq!(
            GroupWord::commutator(&w("a"), &w("b")),
            w("a^-1 b^-1 a b")
        );
        assert_eq!(w("g").conjugate(&w("a")), w("a^-1 g a"));
    }

    fn arb_symbols() -> impl Strategy<Value = Vec<GenSymbol>> {
        prop::collection::vec((0u32..3, any::<bool>()), 0..24).prop_map(|v| {
            v.into_iter()
                .map(|(gen, inverse)| GenSymbol { gen, inverse })
                .collect()
        })
    }

    fn is_reduced(word: &GroupWord) -> bool {
        word.symbols()
            .windows(2)
            .all(|p| !(p[0].gen == p[1].gen && p[0].inverse != p[1].inverse))
    }

    proptest! {
        #[test]
        fn products_stay_reduced(u in arb_symbols(), v in arb_symbols()) {
            let u = GroupWord::from_symbols(u);
            let v = GroupWord::from_symbols(v);
            prop_assert!(is_reduced(&u.multiply(&v)));
            prop_assert!(u.multiply(&u.inverse()).is_identity());
            prop_assert!(u.inverse().multiply(&u).is_identity());
        }

        #[test]
        fn text_round_trip(u in arb_symbols()) {
            let u = GroupWord::from_symbols(u);
            let n = names();
            let text = u.display(&n).to_string();
            prop_assert_eq!(GroupWord::parse(&text, &n).unwrap(), u);
        }
    }
}
