//! Permutations of a finite letter set `{0, .., m-1}`.
//!
//! Permutations act on the right: `(i)^(pq) = ((i)^p)^q`, so `p.compose(q)`
//! applies `p` first.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm {
            images: (0..m).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &i in &images {
            if i >= m || seen[i] {
                return Err(Error::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of `m` letters from disjoint cycles.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..m).collect();
        let mut touched = vec![false; m];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= m || touched[a] {
                    return Err(Error::NotAPermutation(cycle.to_vec()));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    /// The cyclic shift `i -> i + 1 mod m`.
    pub fn cycle(m: usize) -> Self {
        Perm {
            images: (0..m).map(|i| (i + 1) % m.max(1)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `p.compose(q)` is the permutation `i -> (i^p)^q`.
    pub fn compose(&self, q: &Perm) -> Result<Perm> {
        if self.degree() != q.degree() {
            return Err(Error::SizeMismatch(self.degree(), q.degree()));
        }
        Ok(self.then(q))
    }

    /// Unchecked version of [`Perm::compose`]; panics on size mismatch.
    pub fn then(&self, q: &Perm) -> Perm {
        assert_eq!(self.degree(), q.degree(), "permutation size mismatch");
        Perm {
            images: self.images.iter().map(|&i| q.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    pub fn pow(&self, n: i64) -> Perm {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = Perm::identity(self.degree());
        for _ in 0..n.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    /// Non-trivial cycles, each starting at its least element, ordered by
    /// that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.images[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, i) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{i}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Orbits of the group generated by `perms` on `{0, .., m-1}`, each sorted,
/// ordered by least element.
pub fn orbits(m: usize, perms: &[Perm]) -> Vec<Vec<usize>> {
    let mut orbit_of = vec![usize::MAX; m];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..m {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut orbit = vec![start];
        orbit_of[start] = id;
        let mut k = 0;
        while k < orbit.len() {
            let i = orbit[k];
            k += 1;
            for p in perms {
                let j = p.image(i);
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    orbit.push(j);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}
