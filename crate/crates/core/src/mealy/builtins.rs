use super::MealyAutomaton;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::tree::{Recursion, SelfSimilarMachine};
use crate::word::GroupWord;

/// A built-in automaton; some built-ins have sections that are words rather
/// than single states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    Mealy(MealyAutomaton),
    Machine(SelfSimilarMachine),
}

impl Builtin {
    pub fn machine(&self) -> SelfSimilarMachine {
        match self {
            Builtin::Mealy(a) => a.to_machine(),
            Builtin::Machine(m) => m.clone(),
        }
    }

    pub fn mealy(&self) -> Option<&MealyAutomaton> {
        match self {
            Builtin::Mealy(a) => Some(a),
            Builtin::Machine(_) => None,
        }
    }
}

pub fn builtin_names() -> &'static [&'static str] {
    &[
        "adding",
        "diagram1",
        "diagram2(n)",
        "diagram3",
        "brunner_sidki",
        "thmD(p)",
        "prop31(l,d)",
    ]
}

/// Splits `name(a,b)` into `name` and its integer arguments.
pub(crate) fn split_call(spec: &str) -> Result<(&str, Vec<usize>)> {
    let spec = spec.trim();
    let Some(open) = spec.find('(') else {
        return Ok((spec, Vec::new()));
    };
    let inner = spec[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| Error::BadParams(format!("unbalanced parentheses in `{spec}`")))?;
    let args = inner
        .split(',')
        .map(|a| {
            a.trim()
                .parse::<usize>()
                .map_err(|_| Error::BadParams(format!("bad argument `{a}` in `{spec}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((&spec[..open], args))
}

fn arity(name: &str, args: &[usize], n: usize) -> Result<()> {
    if args.len() != n {
        return Err(Error::BadParams(format!(
            "`{name}` takes {n} argument(s), got {}",
            args.len()
        )));
    }
    Ok(())
}

type Row<'a> = (&'a str, Vec<&'a str>, Perm);

fn mealy_from_rows(m: usize, rows: &[Row<'_>]) -> MealyAutomaton {
    let gens: Vec<(&str, &[&str], Perm)> = rows
        .iter()
        .map(|(n, s, p)| (*n, s.as_slice(), p.clone()))
        .collect();
    let mach = SelfSimilarMachine::from_text(m, &gens).expect("built-in rows are well formed");
    MealyAutomaton::from_machine(&mach).expect("built-in rows are Mealy")
}

fn swap01(m: usize) -> Perm {
    Perm::from_cycles(m, &[&[0, 1]]).expect("m >= 2")
}

pub fn adding() -> MealyAutomaton {
    mealy_from_rows(2, &[("a", vec!["e", "a"], Perm::cycle(2))])
}

pub fn diagram1() -> MealyAutomaton {
    mealy_from_rows(
        3,
        &[
            ("a", vec!["e", "a", "e"], swap01(3)),
            ("g", vec!["g", "e", "a"], Perm::identity(3)),
        ],
    )
}

/// `a1 = (e, a1, e)(0 1)` and `ai = (ai, ai, a(i-1))`.
pub fn diagram2(n: usize) -> Result<MealyAutomaton> {
    if n == 0 {
        return Err(Error::BadParams("diagram2 needs n >= 1".into()));
    }
    let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let mut rows = vec![(names[0].as_str(), vec!["e", names[0].as_str(), "e"], swap01(3))];
    for i in 1..n {
        rows.push((
            names[i].as_str(),
            vec![names[i].as_str(), names[i].as_str(), names[i - 1].as_str()],
            Perm::identity(3),
        ));
    }
    Ok(mealy_from_rows(3, &rows))
}

/// The 4-letter automaton of `(Z wr Z) wr C_2`; `as` is the conjugate of `a`
/// by `s`.
pub fn diagram3() -> MealyAutomaton {
    mealy_from_rows(
        4,
        &[
            (
                "s",
                vec!["e", "e", "e", "e"],
                Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ),
            ("g", vec!["g", "e", "as", "as"], Perm::identity(4)),
            ("a", vec!["e", "a", "e", "e"], swap01(4)),
            (
                "as",
                vec!["e", "e", "e", "a"],
                Perm::from_cycles(4, &[&[2, 3]]).unwrap(),
            ),
        ],
    )
}

/// The binary pair `a = ((e,e),(a,e))(0 1)`, `at = ((at,a),(e,e))`, with the
/// depth-one states named `u = (a, e)` and `v = (at, a)`.
pub fn brunner_sidki() -> MealyAutomaton {
    mealy_from_rows(
        2,
        &[
            ("a", vec!["e", "u"], Perm::cycle(2)),
            ("at", vec!["v", "e"], Perm::identity(2)),
            ("u", vec!["a", "e"], Perm::identity(2)),
            ("v", vec!["at", "a"], Perm::identity(2)),
        ],
    )
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k))
}

/// `s = (e,..,e,s)(0 1 .. p-1)`, `a = (a, a s, .., a s^(p-1), a b)`,
/// `b = (e,..,e,a)` on `p + 1` letters.
pub fn thm_d(p: usize) -> Result<SelfSimilarMachine> {
    if !is_prime(p) {
        return Err(Error::BadParams(format!("thmD needs a prime, got {p}")));
    }
    let m = p + 1;
    let (s, a, b) = (0, 1, 2);
    let gen = GroupWord::generator;
    let mut cyc: Vec<usize> = (1..p).collect();
    cyc.push(0);
    cyc.push(p);
    let mut s_secs = vec![GroupWord::identity(); m];
    s_secs[p] = gen(s);
    let mut a_secs: Vec<GroupWord> = (0..p).map(|k| gen(a).multiply(&gen(s).pow(k as i64))).collect();
    a_secs.push(gen(a).multiply(&gen(b)));
    let mut b_secs = vec![GroupWord::identity(); m];
    b_secs[p] = gen(a);
    SelfSimilarMachine::new(
        m,
        vec!["s".into(), "a".into(), "b".into()],
        vec![
            Recursion {
                sections: s_secs,
                perm: Perm::from_images(cyc).unwrap(),
            },
            Recursion {
                sections: a_secs,
                perm: Perm::identity(m),
            },
            Recursion {
                sections: b_secs,
                perm: Perm::identity(m),
            },
        ],
    )
}

/// Generators `g1..gl` and `a1..ad` of `Z^l wr Z^d`:
/// `g1 = (gl, e, g1, a1)`, `gi = (g(i-1), e, gi, e)`,
/// `a1 = (e, a1, ad, e)(0 1)`, `ai = (ai, ai, a(i-1), e)`.
/// For `d = 1` the third letter is dropped.
pub fn prop31(l: usize, d: usize) -> Result<MealyAutomaton> {
    if l == 0 || d == 0 {
        return Err(Error::BadParams("prop31 needs l >= 1 and d >= 1".into()));
    }
    let g: Vec<String> = (1..=l).map(|i| format!("g{i}")).collect();
    let a: Vec<String> = (1..=d).map(|i| format!("a{i}")).collect();
    let m = if d == 1 { 3 } else { 4 };
    let fit = |v: [&str; 4]| -> Vec<String> {
        let v: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        if d == 1 {
            vec![v[0].clone(), v[1].clone(), v[3].clone()]
        } else {
            v
        }
    };
    let mut rows: Vec<(String, Vec<String>, Perm)> = Vec::new();
    rows.push((g[0].clone(), fit([&g[l - 1], "e", &g[0], &a[0]]), Perm::identity(m)));
    for i in 1..l {
        rows.push((g[i].clone(), fit([&g[i - 1], "e", &g[i], "e"]), Perm::identity(m)));
    }
    rows.push((a[0].clone(), fit(["e", &a[0], &a[d - 1], "e"]), swap01(m)));
    for i in 1..d {
        rows.push((a[i].clone(), fit([&a[i], &a[i], &a[i - 1], "e"]), Perm::identity(m)));
    }
    let rows: Vec<Row<'_>> = rows
        .iter()
        .map(|(n, s, p)| (n.as_str(), s.iter().map(String::as_str).collect(), p.clone()))
        .collect();
    Ok(mealy_from_rows(m, &rows))
}

/// Resolves `name` or `name(args)`.
pub fn builtin(spec: &str) -> Result<Builtin> {
    let (name, args) = split_call(spec)?;
    let out = match name {
        "adding" => {
            arity(name, &args, 0)?;
            Builtin::Mealy(adding())
        }
        "diagram1" => {
            arity(name, &args, 0)?;
            Builtin::Mealy(diagram1())
        }
        "diagram2" => {
            arity(name, &args, 1)?;
            Builtin::Mealy(diagram2(args[0])?)
        }
        "diagram3" => {
            arity(name, &args, 0)?;
            Builtin::Mealy(diagram3())
        }
        "brunner_sidki" => {
            arity(name, &args, 0)?;
            Builtin::Mealy(brunner_sidki())
        }
        "thmD" => {
            arity(name, &args, 1)?;
            Builtin::Machine(thm_d(args[0])?)
        }
        "prop31" => {
            arity(name, &args, 2)?;
            Builtin::Mealy(prop31(args[0], args[1])?)
        }
        _ => return Err(Error::UnknownBuiltin(spec.to_string())),
    };
    Ok(out)
}
