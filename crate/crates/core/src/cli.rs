//! The `selfsim` command line.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog;
use crate::error::Error;
use crate::handle::{machine_handle, ActionHandle};
use crate::mealy::{emit, to_dot, MealyAutomaton};
use crate::tree::{format_string, inflate, parse_string};

#[derive(Parser, Debug)]
#[command(name = "selfsim", version, about = "Self-similar group actions on rooted trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Emit {
    /// One `name = (s_0, ..)perm` line per generator.
    Recursions,
    /// Automaton file.
    File,
    /// Graphviz digraph.
    Dot,
}

#[derive(clap::Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value = "recursions")]
    emit: Emit,
    /// Write to a file instead of standard output.
    #[arg(short = 'o', long = "output")]
    output: Option<String>,
    /// State cap for automaton output.
    #[arg(long, default_value_t = 256)]
    max_states: usize,
    /// Separation depth for merging states of word machines.
    #[arg(long, default_value_t = 12)]
    sep_depth: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply an element to a string.
    Act {
        #[arg(long)]
        machine: String,
        #[arg(long)]
        word: String,
        #[arg(long)]
        string: String,
    },
    /// Orbit sizes of the generators on the first level.
    OrbitType {
        #[arg(long)]
        machine: String,
    },
    /// Root permutations of all sections down to a depth.
    Portrait {
        #[arg(long)]
        machine: String,
        #[arg(long)]
        word: String,
        #[arg(long)]
        depth: usize,
    },
    /// State closure of an element.
    States {
        #[arg(long)]
        machine: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 64)]
        max: usize,
        #[arg(long, default_value_t = 12)]
        sep_depth: usize,
    },
    /// Check that each word of a relation file is trivial to a depth.
    Check {
        #[arg(long)]
        machine: String,
        #[arg(long)]
        relations: String,
        #[arg(long)]
        depth: usize,
    },
    /// Find a string moved by an element, or sample the kernel.
    Witness {
        #[arg(long)]
        model: String,
        #[arg(long, conflicts_with = "samples")]
        word: Option<String>,
        #[arg(long)]
        max_depth: usize,
        #[arg(long, required_unless_present = "word")]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build the representation of named group data.
    Build {
        #[arg(long)]
        data: String,
        #[command(flatten)]
        out: Output,
    },
    /// Read a machine on blocks of k letters.
    Inflate {
        #[arg(long)]
        machine: String,
        #[arg(short = 'k')]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Concatenate two wreath product data, `SEL+SEL`.
    Concat {
        #[arg(long)]
        data: String,
        #[command(flatten)]
        out: Output,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotFiniteState(_) | Error::Oracle(_) | Error::Unsupported(_) => {
                Failure::Check(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Check(e.to_string())
    }
}

type Outcome = std::result::Result<bool, Failure>;

/// Runs the command line; returns the exit code: 0 on success, 1 when a
/// check fails, 2 on usage or input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn word_of(h: &dyn ActionHandle, w: &str) -> crate::Result<()> {
    h.apply(w, &[]).map(|_| ())
}

fn execute(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Act { machine, word, string } => {
            let h = catalog::machine(&machine)?;
            let s = parse_string(&string)?;
            writeln!(out, "{}", format_string(&h.apply(&word, &s)?))?;
        }
        Command::OrbitType { machine } => {
            writeln!(out, "{}", catalog::machine(&machine)?.orbit_type())?;
        }
        Command::Portrait { machine, word, depth } => {
            write!(out, "{}", catalog::machine(&machine)?.portrait(&word, depth)?)?;
        }
        Command::States {
            machine,
            word,
            max,
            sep_depth,
        } => {
            if max == 0 {
                return Err(Failure::Usage("--max must be at least 1".into()));
            }
            let (states, truncated) = catalog::machine(&machine)?.states(&word, max, sep_depth)?;
            for s in &states {
                writeln!(out, "{s}")?;
            }
            writeln!(out, "count: {}", states.len())?;
            writeln!(out, "truncated: {truncated}")?;
        }
        Command::Check {
            machine,
            relations,
            depth,
        } => {
            let h = catalog::machine(&machine)?;
            let text = std::fs::read_to_string(&relations)
                .map_err(|e| Failure::Usage(format!("cannot read `{relations}`: {e}")))?;
            let words: Vec<&str> = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .collect();
            for w in &words {
                word_of(h.as_ref(), w)?;
            }
            let mut all = true;
            for w in words {
                let ok = h.is_trivial(w, depth)?;
                all &= ok;
                writeln!(out, "{} {w}", if ok { "PASS" } else { "FAIL" })?;
            }
            return Ok(all);
        }
        Command::Witness {
            model,
            word,
            max_depth,
            samples,
            seed,
        } => {
            let h = catalog::data_handle(&model)?;
            if let Some(w) = word {
                match h.moving_string(&w, max_depth)? {
                    Some(s) => writeln!(out, "{}", format_string(&s))?,
                    None => writeln!(out, "trivial-to-depth {max_depth}")?,
                }
            } else {
                let r = h.witness(samples.unwrap_or(0), max_depth, seed)?;
                writeln!(out, "samples: {}", r.samples)?;
                writeln!(out, "nontrivial: {}", r.nontrivial)?;
                writeln!(out, "witnessed: {}", r.nontrivial - r.failures.len())?;
                writeln!(out, "longest witness: {}", r.max_witness_len)?;
                for f in &r.failures {
                    writeln!(out, "unwitnessed: {f}")?;
                }
                return Ok(r.passed());
            }
        }
        Command::Build { data, out: o } => {
            let h = catalog::data_handle(&data)?;
            emit_handle(h.as_ref(), &o, out)?;
        }
        Command::Inflate { machine, k, out: o } => {
            let m = catalog::machine(&machine)?.to_machine()?;
            let h = machine_handle(inflate(&m, k)?);
            emit_handle(&h, &o, out)?;
        }
        Command::Concat { data, out: o } => {
            let sel = if data.starts_with("concat:") {
                data
            } else {
                format!("concat:{data}")
            };
            let h = catalog::data_handle(&sel)?;
            emit_handle(h.as_ref(), &o, out)?;
        }
    }
    Ok(true)
}

fn emit_handle(h: &dyn ActionHandle, o: &Output, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let automaton = |h: &dyn ActionHandle| -> crate::Result<MealyAutomaton> { h.to_mealy(o.max_states, o.sep_depth) };
    let text = match o.emit {
        Emit::Recursions => {
            let mut s = h.recursion_lines()?.join("\n");
            s.push('\n');
            s
        }
        Emit::File => emit(&automaton(h)?),
        Emit::Dot => to_dot(&automaton(h)?),
    };
    match &o.output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}
