use std::time::Instant;

use rayon::prelude::*;

use super::{Claim, Counterexample, Report, VerifyError};
use crate::automata::{synthesize_from_oracle, AutomataError, Dfa};
use crate::classify::{Profile, SequenceKind};
use crate::zeck::{fib_u64, lucas_subset_decompose, Parity, ZeckWord};

/// Smallest synthesis depth accepted by [`verify_figures`].
pub const MIN_FIGURE_DEPTH: usize = 10;

/// Membership of every `n` with a Zeckendorf word of length at most `len`.
fn membership_table(kind: SequenceKind, len: usize) -> Result<Vec<bool>, VerifyError> {
    let bound = fib_u64(len + 2).ok_or_else(|| {
        AutomataError::InvalidAutomaton(format!("words of length {len} overflow u64"))
    })?;
    (0..bound)
        .into_par_iter()
        .map(|n| match n {
            0 => Ok(false),
            n => Ok(kind.contains(&Profile::of(n)?)),
        })
        .collect()
}

/// Synthesizes an automaton reading Zeckendorf words (most significant digit
/// first) that accepts exactly the members of `kind`, and verifies it on all
/// words up to `depth + margin`.
pub fn synthesize_sequence(kind: SequenceKind, depth: usize, margin: usize) -> Result<Dfa, VerifyError> {
    let table = membership_table(kind, depth + margin)?;
    let oracle = |w: &ZeckWord| {
        let n = w.decode().expect("short words fit in u64");
        table[n as usize]
    };
    Ok(synthesize_from_oracle(oracle, depth, margin)?)
}

/// The Lucas-sum characterizations of the one-even and one-odd sets.
fn lucas_characterization(kind: SequenceKind, n: u64) -> bool {
    match kind {
        SequenceKind::OneEven => n >= 1 && lucas_subset_decompose(n - 1, Parity::Odd, 1).is_some(),
        SequenceKind::OneOdd => n >= 2 && lucas_subset_decompose(n - 2, Parity::Even, 4).is_some(),
        _ => unreachable!("only the one-even and one-odd sets have a Lucas form"),
    }
}

/// The shortest, then lexicographically first, valid Zeckendorf word up to
/// `max_len` on which `dfa` and the characterization disagree.
fn first_disagreement(dfa: &Dfa, kind: SequenceKind, max_len: usize) -> Option<String> {
    let mut layer = vec![(0u64, dfa.start())];
    for len in 0..=max_len {
        let mut next = Vec::new();
        for &(bits, state) in &layer {
            if dfa.is_accepting(state) != lucas_characterization(kind, value_of(bits)) {
                return Some(
                    (0..len).rev().map(|i| if bits >> i & 1 == 1 { '1' } else { '0' }).collect(),
                );
            }
            next.push((bits << 1, dfa.step(state, 0)));
            if bits & 1 == 0 {
                next.push((bits << 1 | 1, dfa.step(state, 1)));
            }
        }
        layer = next;
    }
    None
}

fn value_of(bits: u64) -> u64 {
    (0..64)
        .filter(|j| bits >> j & 1 == 1)
        .map(|j| fib_u64(j + 2).expect("word fits the table"))
        .sum()
}

/// Synthesizes the one-even and one-odd automata at depth `depth`, verifies
/// them to `depth + margin`, and checks them against the Lucas-sum forms on
/// every Zeckendorf word of that length. State counts go in the details.
pub fn verify_figures(depth: usize, margin: usize) -> Result<Report, VerifyError> {
    if depth < MIN_FIGURE_DEPTH {
        return Err(AutomataError::InvalidAutomaton(format!(
            "figure synthesis needs depth >= {MIN_FIGURE_DEPTH}, got {depth}"
        ))
        .into());
    }
    let start = Instant::now();
    let horizon = depth + margin;
    let mut report = Report::new(Claim::Figures, 0, horizon as u64);
    let mut counts = Vec::new();
    for kind in [SequenceKind::OneEven, SequenceKind::OneOdd] {
        let dfa = synthesize_sequence(kind, depth, margin)?;
        if let Some(word) = first_disagreement(&dfa, kind, horizon) {
            let why = format!("{kind} automaton disagrees with the Lucas-sum form on {word:?}");
            return Ok(report.fail(Counterexample::Word(word), why).timed(start));
        }
        counts.push(format!("{kind}: {} states", dfa.num_states()));
    }
    report.details = format!(
        "{}; synthesized at depth {depth}, verified to length {horizon}",
        counts.join(", ")
    );
    Ok(report.timed(start))
}
