//! Bounded replays of the theorems about φ-representations.
//!
//! Each claim is checked exhaustively over a range and summarised in a
//! [`Report`]. A universally quantified statement becomes "no counterexample
//! up to N"; the bound is recorded in the report's range.

mod builtins;
mod figures;
mod theorems;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automata::AutomataError;
use crate::classify::ClassifyError;

pub use builtins::{builtin_semantics, sweep_builtin, verify_builtins, MAX_WORD_LENGTH};
pub use figures::{synthesize_sequence, verify_figures, MIN_FIGURE_DEPTH};
pub use theorems::{
    brute_force_lucas_subsets, verify_kimberling, ONE_EVEN_PREFIX, ONE_ODD_PREFIX, SHEVELEV_PREFIX, verify_lucas_greedy, verify_min_exponent,
    verify_one_even, verify_one_odd, verify_two_odd,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Automata(#[from] AutomataError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// What a failing check found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Counterexample {
    /// An integer the claim fails for.
    Integer(u64),
    /// An input word, atoms concatenated.
    Word(String),
    /// Something the claim says exists but was not found in range.
    Missing(String),
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Integer(n) => write!(f, "n = {n}"),
            Counterexample::Word(w) => write!(f, "word {w:?}"),
            Counterexample::Missing(what) => write!(f, "missing {what}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: u64,
    pub hi: u64,
}

/// Outcome of one claim replay.
///
/// The elapsed time is kept out of the JSON form, so reports for the same
/// claim and bound serialize identically on every run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub claim_id: String,
    pub range_checked: Interval,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
    pub details: String,
}

impl Report {
    fn new(claim: Claim, lo: u64, hi: u64) -> Report {
        Report {
            claim_id: claim.name().to_string(),
            range_checked: Interval { lo, hi },
            passed: true,
            counterexample: None,
            elapsed: Duration::ZERO,
            details: String::new(),
        }
    }

    fn fail(mut self, counterexample: Counterexample, why: impl Into<String>) -> Report {
        self.passed = false;
        self.counterexample = Some(counterexample);
        self.details = why.into();
        self
    }

    fn timed(mut self, since: Instant) -> Report {
        self.elapsed = since.elapsed();
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} [{}, {}] ({:.2?})",
            self.claim_id, self.range_checked.lo, self.range_checked.hi, self.elapsed
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample: {c}")?;
        }
        if !self.details.is_empty() {
            write!(f, "\n    {}", self.details)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    /// Antipalindromic ⇔ doubled exponents give an integer ⇔ all exponents even.
    Kimberling,
    /// Smallest exponent is even and located by the Lucas bracket.
    MinExponent,
    /// Exactly one even exponent ⇔ `n - 1` is a sum of odd-indexed Lucas numbers.
    OneEven,
    /// Exactly one odd exponent ⇔ `n - 2` is a sum of `L_{2i}`, `i ≥ 2`; that exponent is 1.
    OneOdd,
    /// Two odd exponents are `(3, 1)` or `(2i+1, 1-2i)`, and all occur.
    TwoOdd,
    /// Greedy Lucas decomposition agrees with brute-force subset sums.
    LucasGreedy,
    /// Builtin regexes agree with their positional meaning.
    Builtins,
    /// Synthesized one-even / one-odd automata match the Lucas characterizations.
    Figures,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::Kimberling,
        Claim::MinExponent,
        Claim::OneEven,
        Claim::OneOdd,
        Claim::TwoOdd,
        Claim::LucasGreedy,
        Claim::Builtins,
        Claim::Figures,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Kimberling => "kimberling",
            Claim::MinExponent => "min_exponent",
            Claim::OneEven => "one_even",
            Claim::OneOdd => "one_odd",
            Claim::TwoOdd => "two_odd",
            Claim::LucasGreedy => "lucas_greedy",
            Claim::Builtins => "builtins",
            Claim::Figures => "figures",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.replace('-', "_");
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| VerifyError::UnknownClaim(s.to_string()))
    }
}

/// Bounds for a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest integer checked by the number-theoretic claims.
    pub max: u64,
    /// Longest word in the builtin sweep.
    pub word_length: usize,
    /// Synthesis depth for the figure automata.
    pub depth: usize,
    /// Extra verification depth beyond `depth`.
    pub margin: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max: 100_000,
            word_length: 12,
            depth: 20,
            margin: crate::automata::DEFAULT_MARGIN,
        }
    }
}

/// Runs claims on a dedicated worker pool. Results do not depend on the
/// number of workers.
pub struct Verifier {
    config: VerifyConfig,
    pool: rayon::ThreadPool,
}

impl Verifier {
    /// `jobs = 0` uses the machine's parallelism.
    pub fn new(config: VerifyConfig, jobs: usize) -> Result<Verifier, VerifyError> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| VerifyError::Pool(e.to_string()))?;
        Ok(Verifier { config, pool })
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.config
    }

    pub fn run(&self, claim: Claim) -> Result<Report, VerifyError> {
        let c = self.config;
        self.pool.install(|| match claim {
            Claim::Kimberling => verify_kimberling(c.max),
            Claim::MinExponent => verify_min_exponent(c.max),
            Claim::OneEven => verify_one_even(c.max),
            Claim::OneOdd => verify_one_odd(c.max),
            Claim::TwoOdd => verify_two_odd(c.max),
            Claim::LucasGreedy => verify_lucas_greedy(c.max),
            Claim::Builtins => Ok(verify_builtins(c.word_length)),
            Claim::Figures => verify_figures(c.depth, c.margin),
        })
    }

    pub fn run_all(&self, claims: &[Claim]) -> Result<Vec<Report>, VerifyError> {
        claims.iter().map(|&c| self.run(c)).collect()
    }
}

/// Evaluates `check` on every integer in `lo..=hi` in parallel, keeping
/// results in order. Stops at the smallest failing integer.
fn sweep<T, F>(lo: u64, hi: u64, check: F) -> Result<Vec<T>, (u64, String)>
where
    T: Send,
    F: Fn(u64) -> Result<T, String> + Sync,
{
    if lo > hi {
        return Ok(Vec::new());
    }
    let results: Vec<Result<T, String>> = (lo..=hi).into_par_iter().map(&check).collect();
    let mut out = Vec::with_capacity(results.len());
    for (n, r) in (lo..=hi).zip(results) {
        out.push(r.map_err(|why| (n, why))?);
    }
    Ok(out)
}
