use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use phirep::classify::{Profile, SequenceKind};
use phirep::golden::{phi_expand, ZPhi};
use phirep::verifier::{Claim, Verifier, VerifyConfig};
use phirep::zeck::{zeck_encode, ZeckWord};

mod dfa;

/// Golden-ratio base and Zeckendorf numeration, φ-representation classes,
/// and a multi-track automaton toolkit.
#[derive(Debug, Parser)]
#[command(name = "phirep", version)]
struct Cli {
    /// Output format. `dot` applies to automaton output only.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for verification; 0 uses every core.
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// φ-representation of a non-negative integer.
    Convert(Number),
    /// Zeckendorf word of an integer, or the value of a word given with --zeck.
    Zeck(Number),
    /// Parity and symmetry profile of a positive integer.
    Classify(Number),
    /// Members of a set up to a limit: shevelev, one_even, one_odd, two_odd.
    Sequence {
        kind: String,
        #[arg(long, default_value_t = 100)]
        limit: u64,
    },
    /// Replay claims over a bounded range. `all` selects every claim.
    Verify {
        #[arg(default_value = "all")]
        claims: Vec<String>,
        /// Largest integer for the number-theoretic claims.
        #[arg(long, default_value_t = 100_000)]
        max: u64,
        /// Longest word in the builtin sweep.
        #[arg(long, default_value_t = 12)]
        length: usize,
        /// Synthesis depth for the automaton claims.
        #[arg(long, default_value_t = 20)]
        depth: usize,
        /// Extra verification depth past --depth.
        #[arg(long, default_value_t = phirep::automata::DEFAULT_MARGIN)]
        margin: usize,
    },
    /// Automaton operations.
    #[command(subcommand)]
    Dfa(dfa::DfaCommand),
}

/// An integer given in decimal, or as a Zeckendorf word with --zeck.
#[derive(Debug, Args)]
struct Number {
    #[arg(required_unless_present = "zeck", conflicts_with = "zeck")]
    n: Option<String>,
    #[arg(long)]
    zeck: Option<String>,
}

impl Number {
    fn value(&self) -> Result<BigInt> {
        match (&self.n, &self.zeck) {
            (Some(n), _) => {
                let v: BigInt = n.parse().with_context(|| format!("{n:?} is not a decimal integer"))?;
                if v < BigInt::from(0) {
                    bail!("{n} is negative");
                }
                Ok(v)
            }
            (None, Some(w)) => {
                let word: ZeckWord = w.parse()?;
                Ok(BigInt::from(word.decode()?))
            }
            (None, None) => bail!("an integer is required"),
        }
    }

    fn value_u64(&self) -> Result<u64> {
        let v = self.value()?;
        u64::try_from(&v).with_context(|| format!("{v} does not fit in 64 bits"))
    }
}

#[derive(Serialize)]
struct ConvertJson {
    n: String,
    exponents: Vec<i64>,
    string: String,
}

#[derive(Serialize)]
struct ZeckJson {
    n: u64,
    zeckendorf: String,
}

/// Printed output plus whether every check it reports succeeded.
type Outcome = Result<bool>;

/// Keys come out sorted, so parsing and re-printing any output is byte-identical.
fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_value(value)?);
    Ok(())
}

fn no_dot(format: Format) -> Result<()> {
    if format == Format::Dot {
        bail!("--format dot is only available for automaton output");
    }
    Ok(())
}

fn convert(num: &Number, format: Format) -> Outcome {
    no_dot(format)?;
    let n = num.value()?;
    let e = phi_expand(&ZPhi::from(n.clone()))?;
    match format {
        Format::Json => print_json(&ConvertJson {
            n: n.to_string(),
            exponents: e.exponents().to_vec(),
            string: e.render(),
        })?,
        _ => println!("{e}"),
    }
    Ok(true)
}

fn zeck(num: &Number, format: Format) -> Outcome {
    no_dot(format)?;
    let n = num.value_u64()?;
    let word = zeck_encode(n);
    match (format, num.zeck.is_some()) {
        (Format::Json, _) => print_json(&ZeckJson {
            n,
            zeckendorf: word.to_string(),
        })?,
        (_, true) => println!("{n}"),
        (_, false) => println!("{word}"),
    }
    Ok(true)
}

fn classify(num: &Number, format: Format) -> Outcome {
    no_dot(format)?;
    let s = Profile::of(num.value_u64()?)?.summary();
    if format == Format::Json {
        print_json(&s)?;
        return Ok(true);
    }
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let list = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(", ");
    println!("n: {}", s.n);
    println!("representation: {}", s.expansion);
    println!("exponents: {}", list(s.expansion.exponents()));
    println!(
        "antipalindromic: {} ({} S)",
        yes_no(s.antipalindromic),
        if s.antipalindromic { "in" } else { "not in" }
    );
    println!("double: {} (= {})", s.double, s.double.sqrt5_form());
    println!("even exponents: {}", s.parity.even_count);
    println!("odd exponents: {} [{}]", s.parity.odd_count, list(&s.parity.odd_exponents));
    match s.min_exponent_bracket {
        Some(i) => println!("smallest exponent: {} (bracket i = {i})", s.parity.min_exponent),
        None => println!("smallest exponent: {}", s.parity.min_exponent),
    }
    if let Some((p, q)) = s.two_odd_pair {
        println!("two odd exponents: ({p}, {q})");
    }
    Ok(true)
}

fn sequence(kind: &str, limit: u64, format: Format) -> Outcome {
    no_dot(format)?;
    let kind: SequenceKind = kind.parse()?;
    let members = phirep::classify::sequence(kind, limit)?;
    match format {
        Format::Json => print_json(&members)?,
        _ => {
            for n in members {
                println!("{n}");
            }
        }
    }
    Ok(true)
}

fn parse_claims(names: &[String]) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    for name in names {
        if name == "all" {
            claims.extend(Claim::ALL);
        } else {
            claims.push(name.parse()?);
        }
    }
    claims.dedup();
    Ok(claims)
}

fn verify(names: &[String], config: VerifyConfig, jobs: usize, format: Format) -> Outcome {
    no_dot(format)?;
    let claims = parse_claims(names)?;
    let reports = Verifier::new(config, jobs)?.run_all(&claims)?;
    match format {
        Format::Json => print_json(&reports)?,
        _ => {
            for r in &reports {
                println!("{r}");
            }
        }
    }
    Ok(reports.iter().all(|r| r.passed))
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Convert(n) => convert(n, cli.format),
        Command::Zeck(n) => zeck(n, cli.format),
        Command::Classify(n) => classify(n, cli.format),
        Command::Sequence { kind, limit } => sequence(kind, *limit, cli.format),
        Command::Verify {
            claims,
            max,
            length,
            depth,
            margin,
        } => {
            let config = VerifyConfig {
                max: *max,
                word_length: *length,
                depth: *depth,
                margin: *margin,
            };
            verify(claims, config, cli.jobs, cli.format)
        }
        Command::Dfa(cmd) => dfa::run(cmd, cli.format, cli.jobs),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
