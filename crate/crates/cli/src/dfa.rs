use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use clap::Subcommand;
use serde::Serialize;

use phirep::automata::{regex_compile, Alphabet, Atom, Builtin, Dfa, ProductOp};
use phirep::classify::SequenceKind;
use phirep::verifier::synthesize_sequence;

use crate::{print_json, Format, Outcome};

const OPERAND_HELP: &str =
    "automaton: builtin:NAME, regex:PATTERN, file:PATH (JSON form), or a bare builtin name";

#[derive(Debug, Subcommand)]
pub enum DfaCommand {
    /// Compile a regex over {0,1}^arity.
    Compile {
        pattern: String,
        /// Number of tracks; inferred from the first [..] atom when omitted.
        #[arg(long)]
        arity: Option<usize>,
    },
    /// A named builtin automaton; lists them all when no name is given.
    Builtin { name: Option<String> },
    /// Product of two automata: and, or, diff.
    Product {
        op: String,
        #[arg(help = OPERAND_HELP)]
        left: String,
        #[arg(help = OPERAND_HELP)]
        right: String,
    },
    /// Complement with respect to all words over the alphabet.
    Complement {
        #[arg(help = OPERAND_HELP)]
        automaton: String,
    },
    /// Erase one track (0-based), keeping the others.
    Project {
        #[arg(help = OPERAND_HELP)]
        automaton: String,
        #[arg(long)]
        track: usize,
    },
    /// Minimal equivalent automaton.
    Minimize {
        #[arg(help = OPERAND_HELP)]
        automaton: String,
    },
    /// Language equivalence; exits 1 with a shortest counterexample if they differ.
    Equiv {
        #[arg(help = OPERAND_HELP)]
        left: String,
        #[arg(help = OPERAND_HELP)]
        right: String,
    },
    /// Run an automaton on one binary word per track (shorter tracks are zero-padded).
    Run {
        #[arg(help = OPERAND_HELP)]
        automaton: String,
        tracks: Vec<String>,
    },
    /// Synthesize the automaton of a set's Zeckendorf words from membership queries.
    Synthesize {
        kind: String,
        #[arg(long, default_value_t = 20)]
        depth: usize,
        #[arg(long, default_value_t = phirep::automata::DEFAULT_MARGIN)]
        margin: usize,
    },
}

/// Arity of the first bracketed atom, or 1 for plain binary patterns.
fn infer_arity(pattern: &str) -> usize {
    match pattern.find('[') {
        Some(open) => {
            let close = pattern[open..].find(']').map_or(pattern.len(), |c| open + c);
            pattern[open..close].matches(',').count() + 1
        }
        None => 1,
    }
}

fn compile(pattern: &str, arity: Option<usize>) -> Result<Dfa> {
    let arity = arity.unwrap_or_else(|| infer_arity(pattern));
    if arity == 0 {
        bail!("arity must be at least 1");
    }
    Ok(regex_compile(pattern, &Alphabet::binary(arity))?)
}

fn load(operand: &str) -> Result<Dfa> {
    if let Some(name) = operand.strip_prefix("builtin:") {
        return Ok(name.parse::<Builtin>()?.compile());
    }
    if let Some(pattern) = operand.strip_prefix("regex:") {
        return compile(pattern, None);
    }
    if let Some(path) = operand.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        return Ok(Dfa::from_json(&text)?);
    }
    operand
        .parse::<Builtin>()
        .map(Builtin::compile)
        .with_context(|| format!("{operand:?} is not an automaton; expected {OPERAND_HELP}"))
}

fn describe(dfa: &Dfa) -> String {
    let accepting: Vec<String> = (0..dfa.num_states())
        .filter(|&q| dfa.is_accepting(q))
        .map(|q| q.to_string())
        .collect();
    let mut out = format!(
        "{} states, start {}, accepting {{{}}}\n",
        dfa.num_states(),
        dfa.start(),
        accepting.join(", ")
    );
    let width = dfa.num_states().saturating_sub(1).to_string().len();
    for q in 0..dfa.num_states() {
        let mark = if dfa.is_accepting(q) { "*" } else { " " };
        let _ = write!(out, "{q:>width$}{mark}");
        for (s, atom) in dfa.alphabet().symbols().iter().enumerate() {
            let _ = write!(out, "  {atom}->{}", dfa.step(q, s));
        }
        out.push('\n');
    }
    out
}

fn emit(dfa: &Dfa, format: Format) -> Outcome {
    match format {
        Format::Text => print!("{}", describe(dfa)),
        Format::Json => print_json(dfa)?,
        Format::Dot => print!("{}", dfa.to_dot()),
    }
    Ok(true)
}

fn word_string(word: &[Atom]) -> String {
    if word.is_empty() {
        "()".to_string()
    } else {
        word.iter().map(Atom::to_string).collect()
    }
}

#[derive(Serialize)]
struct EquivJson {
    equivalent: bool,
    counterexample: Option<String>,
}

#[derive(Serialize)]
struct RunJson {
    accepted: bool,
}

#[derive(Serialize)]
struct BuiltinJson {
    name: &'static str,
    arity: usize,
    pattern: &'static str,
}

fn list_builtins(format: Format) -> Outcome {
    let all: Vec<BuiltinJson> = Builtin::ALL
        .iter()
        .map(|b| BuiltinJson {
            name: b.name(),
            arity: b.arity(),
            pattern: b.pattern(),
        })
        .collect();
    match format {
        Format::Json => print_json(&all)?,
        Format::Text => {
            for b in all {
                println!("{:<12} {}  {}", b.name, b.arity, b.pattern);
            }
        }
        Format::Dot => bail!("--format dot needs a single automaton"),
    }
    Ok(true)
}

pub fn run(cmd: &DfaCommand, format: Format, jobs: usize) -> Outcome {
    match cmd {
        DfaCommand::Compile { pattern, arity } => emit(&compile(pattern, *arity)?, format),
        DfaCommand::Builtin { name: None } => list_builtins(format),
        DfaCommand::Builtin { name: Some(name) } => emit(&name.parse::<Builtin>()?.compile(), format),
        DfaCommand::Product { op, left, right } => {
            let op: ProductOp = op.parse()?;
            emit(&load(left)?.product(op, &load(right)?)?, format)
        }
        DfaCommand::Complement { automaton } => emit(&load(automaton)?.complement(), format),
        DfaCommand::Project { automaton, track } => emit(&load(automaton)?.project(*track)?, format),
        DfaCommand::Minimize { automaton } => emit(&load(automaton)?.minimize(), format),
        DfaCommand::Equiv { left, right } => {
            crate::no_dot(format)?;
            let witness = load(left)?.equivalent(&load(right)?)?;
            let equivalent = witness.is_none();
            let counterexample = witness.as_deref().map(word_string);
            match format {
                Format::Json => print_json(&EquivJson {
                    equivalent,
                    counterexample,
                })?,
                _ => match counterexample {
                    None => println!("equivalent"),
                    Some(w) => println!("not equivalent; counterexample {w}"),
                },
            }
            Ok(equivalent)
        }
        DfaCommand::Run { automaton, tracks } => {
            crate::no_dot(format)?;
            let dfa = load(automaton)?;
            let tracks: Vec<&str> = tracks.iter().map(String::as_str).collect();
            let accepted = dfa.accepts_tracks(&tracks)?;
            match format {
                Format::Json => print_json(&RunJson { accepted })?,
                _ => println!("{}", if accepted { "accept" } else { "reject" }),
            }
            Ok(true)
        }
        DfaCommand::Synthesize { kind, depth, margin } => {
            let kind: SequenceKind = kind.parse()?;
            let pool = rayon_pool(jobs)?;
            match pool.install(|| synthesize_sequence(kind, *depth, *margin)) {
                Ok(dfa) => emit(&dfa, format),
                Err(phirep::verifier::VerifyError::Automata(
                    e @ phirep::automata::AutomataError::InconsistentConjecture { .. },
                )) => {
                    eprintln!("error: {e}");
                    Ok(false)
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn rayon_pool(jobs: usize) -> Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_inference() {
        assert_eq!(infer_arity("(0|1)*1"), 1);
        assert_eq!(infer_arity("[0,1]*"), 2);
        assert_eq!(infer_arity("0*[1,0,1]"), 3);
    }

    #[test]
    fn operands() {
        assert_eq!(load("builtin:end1").unwrap(), load("end1").unwrap());
        assert_eq!(load("regex:(0|1)*1").unwrap(), load("end1").unwrap());
        assert!(load("nosuch").is_err());
        assert!(load("file:/nonexistent/x.json").is_err());
    }
}
