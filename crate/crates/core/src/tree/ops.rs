use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{orbits, Perm};

use super::action::TreeAction;

fn check_letters(m: usize, s: &[usize]) -> Result<()> {
    match s.iter().find(|&&y| y >= m) {
        Some(&y) => Err(Error::LetterOutOfRange { letter: y, size: m }),
        None => Ok(()),
    }
}

/// Image of the string `s` under `a`.
pub fn apply<T: TreeAction + ?Sized>(mach: &T, a: &T::State, s: &[usize]) -> Result<Vec<usize>> {
    check_letters(mach.degree(), s)?;
    let mut out = Vec::with_capacity(s.len());
    let mut cur = a.clone();
    for (k, &y) in s.iter().enumerate() {
        if mach.is_identity(&cur) {
            out.extend_from_slice(&s[k..]);
            break;
        }
        out.push(mach.root_perm(&cur).image(y));
        cur = mach.section(&cur, y);
    }
    Ok(out)
}

/// Images of every string of length `depth`, in lexicographic order of the
/// source strings.
pub fn apply_level<T: TreeAction + ?Sized>(
    mach: &T,
    a: &T::State,
    depth: usize,
) -> Vec<Vec<usize>> {
    type Memo<S> = HashMap<S, (Vec<S>, Perm)>;
    fn go<T: TreeAction + ?Sized>(
        mach: &T,
        a: &T::State,
        left: usize,
        memo: &mut Memo<T::State>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(Vec::new());
            return;
        }
        if !memo.contains_key(a) {
            let d = mach.decompose(a);
            memo.insert(a.clone(), d);
        }
        let (sections, perm) = memo[a].clone();
        for (y, sec) in sections.iter().enumerate() {
            let mark = out.len();
            go(mach, sec, left - 1, memo, out);
            for img in &mut out[mark..] {
                img.push(perm.image(y));
            }
        }
    }
    let mut out = Vec::new();
    go(mach, a, depth, &mut Memo::new(), &mut out);
    for img in &mut out {
        img.reverse();
    }
    out
}

/// A shortest string moved by `a`, lexicographically least among the
/// shortest, of length at most `max_depth`. `None` means `a` is trivial to
/// depth `max_depth`.
///
/// Breadth-first over the vertices fixed by `a`; a vertex whose section was
/// already seen is not expanded again, since it cannot contribute a shorter
/// or lexicographically smaller witness.
pub fn find_moving_string<T: TreeAction + ?Sized>(
    mach: &T,
    a: &T::State,
    max_depth: usize,
) -> Option<Vec<usize>> {
    let mut queue: VecDeque<(Vec<usize>, T::State)> = VecDeque::new();
    let mut seen: HashSet<T::State> = HashSet::new();
    if mach.is_identity(a) {
        return None;
    }
    seen.insert(a.clone());
    queue.push_back((Vec::new(), a.clone()));
    while let Some((prefix, state)) = queue.pop_front() {
        if prefix.len() >= max_depth {
            continue;
        }
        let perm = mach.root_perm(&state);
        if let Some(y) = (0..perm.degree()).find(|&y| perm.image(y) != y) {
            let mut s = prefix;
            s.push(y);
            return Some(s);
        }
        if prefix.len() + 1 >= max_depth {
            continue;
        }
        for y in 0..mach.degree() {
            let child = mach.section(&state, y);
            if mach.is_identity(&child) || !seen.insert(child.clone()) {
                continue;
            }
            let mut p = prefix.clone();
            p.push(y);
            queue.push_back((p, child));
        }
    }
    None
}

pub fn trivial_to_depth<T: TreeAction + ?Sized>(mach: &T, a: &T::State, depth: usize) -> bool {
    find_moving_string(mach, a, depth).is_none()
}

/// Whether `a` and `b` agree on every string of length at most `depth`.
pub fn equal_to_depth<T: TreeAction + ?Sized>(
    mach: &T,
    a: &T::State,
    b: &T::State,
    depth: usize,
) -> bool {
    if a == b {
        return true;
    }
    let q = mach.multiply(a, &mach.invert(b));
    trivial_to_depth(mach, &q, depth)
}

/// Like [`equal_to_depth`] for states of two different machines on the
/// same alphabet, by synchronized descent over pairs of sections.
pub fn equal_to_depth_across<A: TreeAction + ?Sized, B: TreeAction + ?Sized>(
    ma: &A,
    a: &A::State,
    mb: &B,
    b: &B::State,
    depth: usize,
) -> bool {
    if ma.degree() != mb.degree() {
        return false;
    }
    let mut seen: HashSet<(A::State, B::State)> = HashSet::new();
    let mut level = vec![(a.clone(), b.clone())];
    seen.insert((a.clone(), b.clone()));
    for d in 0..depth {
        let mut next = Vec::new();
        for (x, y) in level {
            if ma.is_identity(&x) && mb.is_identity(&y) {
                continue;
            }
            if ma.root_perm(&x) != mb.root_perm(&y) {
                return false;
            }
            if d + 1 == depth {
                continue;
            }
            for letter in 0..ma.degree() {
                let pair = (ma.section(&x, letter), mb.section(&y, letter));
                if seen.insert(pair.clone()) {
                    next.push(pair);
                }
            }
        }
        level = next;
    }
    true
}

/// Root permutations of all sections of an automorphism along the vertices
/// of length less than `depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Portrait {
    pub depth: usize,
    pub labels: BTreeMap<Vec<usize>, Perm>,
}

impl Portrait {
    pub fn label(&self, vertex: &[usize]) -> Option<&Perm> {
        self.labels.get(vertex)
    }

    /// Vertices in depth-first pre-order (lexicographic order), each with its
    /// label, as `(vertex, perm)` pairs.
    pub fn preorder(&self) -> impl Iterator<Item = (&Vec<usize>, &Perm)> {
        self.labels.iter()
    }
}

impl fmt::Display for Portrait {
    /// One line per vertex: two spaces per level, the vertex (`*` for the
    /// root), then its label.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, perm) in self.preorder() {
            let indent = "  ".repeat(v.len());
            let name = if v.is_empty() {
                "*".to_string()
            } else {
                format_string(v)
            };
            writeln!(f, "{indent}{name} {perm}")?;
        }
        Ok(())
    }
}

/// Digits for alphabets of at most 10 letters, comma-separated otherwise.
pub fn format_string(s: &[usize]) -> String {
    if s.iter().all(|&y| y < 10) {
        s.iter().map(|y| y.to_string()).collect()
    } else {
        s.iter()
            .map(|y| y.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses digits (`0102`) or a comma-separated list (`0,11,3`).
pub fn parse_string(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let bad = || Error::WordSyntax(format!("bad string `{text}`"));
    if text.contains(',') {
        text.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    } else {
        text.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}

pub fn portrait<T: TreeAction + ?Sized>(mach: &T, a: &T::State, depth: usize) -> Portrait {
    let mut labels = BTreeMap::new();
    let mut level = vec![(Vec::new(), a.clone())];
    for d in 0..depth {
        let mut next = Vec::new();
        for (v, state) in level {
            let (sections, perm) = mach.decompose(&state);
            labels.insert(v.clone(), perm);
            if d + 1 < depth {
                for (y, sec) in sections.into_iter().enumerate() {
                    let mut w = v.clone();
                    w.push(y);
                    next.push((w, sec));
                }
            }
        }
        level = next;
    }
    Portrait { depth, labels }
}

/// The closure of a state under sections, up to a cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSet<S> {
    pub states: Vec<S>,
    pub truncated: bool,
}

/// Breadth-first closure of `a` under taking sections. States are merged by
/// `==` when the machine has exact equality, else by [`equal_to_depth`] at
/// `sep_depth`. Stops with `truncated` set once more than `max_states`
/// classes appear.
pub fn states<T: TreeAction + ?Sized>(
    mach: &T,
    a: &T::State,
    max_states: usize,
    sep_depth: usize,
) -> StateSet<T::State> {
    let exact = mach.exact_equality();
    let mut classes: Vec<T::State> = Vec::new();
    let mut seen: HashSet<T::State> = HashSet::new();
    let mut queue = VecDeque::new();
    queue.push_back(a.clone());
    seen.insert(a.clone());
    while let Some(s) = queue.pop_front() {
        let fresh = exact
            || !classes.iter().any(|c| {
                (mach.is_identity(c) && mach.is_identity(&s))
                    || equal_to_depth(mach, c, &s, sep_depth)
            });
        if !fresh {
            continue;
        }
        if classes.len() == max_states {
            return StateSet {
                states: classes,
                truncated: true,
            };
        }
        classes.push(s.clone());
        for y in 0..mach.degree() {
            let child = mach.section(&s, y);
            if seen.insert(child.clone()) {
                queue.push_back(child);
            }
        }
    }
    StateSet {
        states: classes,
        truncated: false,
    }
}

/// Orbit sizes of the first-level action, orbits ordered by least letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitType(pub Vec<usize>);

impl fmt::Display for OrbitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn orbit_type<T: TreeAction + ?Sized>(mach: &T, gens: &[T::State]) -> OrbitType {
    let perms: Vec<Perm> = gens.iter().map(|g| mach.root_perm(g)).collect();
    OrbitType(orbits(mach.degree(), &perms).iter().map(Vec::len).collect())
}

/// Orbit-type of the group generated by all of the machine's generators.
pub fn machine_orbit_type<T: TreeAction + ?Sized>(mach: &T) -> OrbitType {
    let gens: Vec<T::State> = mach.generators().into_iter().map(|(_, g)| g).collect();
    orbit_type(mach, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::SelfSimilarMachine;
    use crate::word::GroupWord;

    fn adding() -> SelfSimilarMachine {
        SelfSimilarMachine::from_text(2, &[("a", &["e", "a"], Perm::cycle(2))]).unwrap()
    }

    fn diagram1() -> SelfSimilarMachine {
        SelfSimilarMachine::from_text(
            3,
            &[
                ("a", &["e", "a", "e"], Perm::from_cycles(3, &[&[0, 1]]).unwrap()),
                ("g", &["g", "e", "a"], Perm::identity(3)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn apply_examples() {
        let m = adding();
        let a = m.word("a").unwrap();
        assert_eq!(apply(&m, &GroupWord::identity(), &[0, 1, 0]).unwrap(), vec![0, 1, 0]);
        assert_eq!(apply(&m, &a, &[1, 1, 1]).unwrap(), vec![0, 0, 0]);
        let d = diagram1();
        assert_eq!(apply(&d, &d.word("g").unwrap(), &[2, 0, 0]).unwrap(), vec![2, 1, 0]);
        assert_eq!(
            apply(&m, &a, &[2]),
            Err(Error::LetterOutOfRange { letter: 2, size: 2 })
        );
    }

    #[test]
    fn diagram1_section_at_letter_two() {
        let d = diagram1();
        assert_eq!(d.section(&d.word("g").unwrap(), 2), d.word("a").unwrap());
    }

    #[test]
    fn equal_to_depth_examples() {
        let m = adding();
        let aa = m.word("a a").unwrap();
        let e = GroupWord::identity();
        assert!(equal_to_depth(&m, &aa, &aa, 10));
        assert!(equal_to_depth(&m, &aa, &e, 1));
        assert!(!equal_to_depth(&m, &aa, &e, 2));
        assert!(equal_to_depth_across(&m, &aa, &m, &e, 1));
        assert!(!equal_to_depth_across(&m, &aa, &m, &e, 2));
    }

    #[test]
    fn moving_strings() {
        let m = adding();
        assert_eq!(find_moving_string(&m, &GroupWord::identity(), 5), None);
        assert_eq!(find_moving_string(&m, &m.word("a").unwrap(), 5), Some(vec![0]));
        assert_eq!(find_moving_string(&m, &m.word("a a").unwrap(), 5), Some(vec![0, 0]));
        assert_eq!(find_moving_string(&m, &m.word("a^4").unwrap(), 2), None);
        assert_eq!(
            find_moving_string(&m, &m.word("a^4").unwrap(), 3),
            Some(vec![0, 0, 0])
        );
    }

    #[test]
    fn portraits() {
        let m = adding();
        let p = portrait(&m, &GroupWord::identity(), 2);
        assert_eq!(p.labels.len(), 3);
        assert!(p.labels.values().all(Perm::is_identity));
        let p = portrait(&m, &m.word("a").unwrap(), 2);
        assert_eq!(p.label(&[]).unwrap().to_string(), "(0 1)");
        assert_eq!(p.label(&[0]).unwrap().to_string(), "()");
        assert_eq!(p.label(&[1]).unwrap().to_string(), "(0 1)");
        assert_eq!(p.to_string(), "* (0 1)\n  0 ()\n  1 (0 1)\n");
        let d = diagram1();
        let p = portrait(&d, &d.word("g").unwrap(), 1);
        assert!(p.label(&[]).unwrap().is_identity());
        assert_eq!(portrait(&m, &GroupWord::identity(), 0).labels.len(), 0);
    }

    #[test]
    fn state_sets() {
        let m = adding();
        let s = states(&m, &GroupWord::identity(), 10, 8);
        assert_eq!(s.states.len(), 1);
        let s = states(&m, &m.word("a").unwrap(), 10, 8);
        assert_eq!(s.states, vec![m.word("a").unwrap(), GroupWord::identity()]);
        assert!(!s.truncated);
        let s = states(&m, &m.word("a").unwrap(), 1, 8);
        assert!(s.truncated);
        assert_eq!(s.states.len(), 1);
    }

    #[test]
    fn orbit_types() {
        let id = SelfSimilarMachine::from_text(3, &[("u", &["u", "u", "u"], Perm::identity(3))])
            .unwrap();
        assert_eq!(machine_orbit_type(&id).to_string(), "(1,1,1)");
        assert_eq!(machine_orbit_type(&diagram1()).to_string(), "(2,1)");
    }

    #[test]
    fn string_text() {
        assert_eq!(format_string(&[0, 1, 2]), "012");
        assert_eq!(format_string(&[0, 11, 2]), "0,11,2");
        assert_eq!(parse_string("012").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_string("0,11,2").unwrap(), vec![0, 11, 2]);
        assert!(parse_string("0a").is_err());
    }

    #[test]
    fn apply_level_matches_apply() {
        let d = diagram1();
        let g = d.word("g a^-1 g").unwrap();
        let imgs = apply_level(&d, &g, 3);
        let mut k = 0;
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    assert_eq!(imgs[k], apply(&d, &g, &[x, y, z]).unwrap());
                    k += 1;
                }
            }
        }
    }
}
