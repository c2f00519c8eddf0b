//! Automaton synthesis from a membership oracle on Zeckendorf words.
//!
//! Every binary word up to length `depth` is labelled (words with `11` are
//! rejected without asking the oracle). Prefixes are then grouped by their
//! labelled residuals over the remaining horizon; once the grouping is closed
//! and consistent it is read off as an automaton. The result is only a
//! conjecture, so it is checked against the oracle on every word up to
//! `depth + margin` before it is returned.

use std::collections::HashMap;

use super::{Alphabet, AutomataError, Dfa};
use crate::zeck::ZeckWord;

pub const DEFAULT_MARGIN: usize = 5;

/// Labels beyond this depth need more memory than they are worth.
pub const MAX_DEPTH: usize = 24;

fn word_string(len: usize, bits: u64) -> String {
    (0..len)
        .rev()
        .map(|i| if bits >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

fn is_valid(bits: u64) -> bool {
    bits & (bits >> 1) == 0
}

fn zeck_word(len: usize, bits: u64) -> ZeckWord {
    ZeckWord::from_bits((0..len).rev().map(|i| bits >> i & 1 == 1).collect())
        .expect("caller checked validity")
}

/// `labels[len][bits]` for every word of length up to `depth`.
fn label_table(oracle: &impl Fn(&ZeckWord) -> bool, depth: usize) -> Vec<Vec<bool>> {
    (0..=depth)
        .map(|len| {
            (0..1u64 << len)
                .map(|bits| is_valid(bits) && oracle(&zeck_word(len, bits)))
                .collect()
        })
        .collect()
}

/// Labels of `u·v` for all `v` up to length `horizon`, packed as bits.
fn residual(labels: &[Vec<bool>], len: usize, bits: u64, horizon: usize) -> Vec<u64> {
    let total = (1usize << (horizon + 1)) - 1;
    let mut sig = vec![0u64; total.div_ceil(64)];
    let mut k = 0usize;
    for l in 0..=horizon {
        let row = &labels[len + l];
        let base = (bits << l) as usize;
        for v in 0..1usize << l {
            if row[base + v] {
                sig[k / 64] |= 1 << (k % 64);
            }
            k += 1;
        }
    }
    sig
}

/// Tries to read an automaton off the prefixes of length at most `d`.
/// On failure returns a prefix whose residual had no match.
fn hypothesis(labels: &[Vec<bool>], depth: usize, d: usize) -> Result<Dfa, String> {
    let horizon = depth - d - 1;
    let mut class_of_sig: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut reps: Vec<(usize, u64)> = Vec::new();
    let mut class_of = vec![Vec::new(); d + 2];
    for len in 0..=d + 1 {
        for bits in 0..1u64 << len {
            let sig = residual(labels, len, bits, horizon);
            let class = match class_of_sig.get(&sig) {
                Some(&c) => c,
                None if len <= d => {
                    class_of_sig.insert(sig, reps.len());
                    reps.push((len, bits));
                    reps.len() - 1
                }
                None => return Err(word_string(len, bits)),
            };
            class_of[len].push(class);
        }
    }
    let mut delta: Vec<Vec<Option<usize>>> = vec![vec![None; 2]; reps.len()];
    for len in 0..=d {
        for bits in 0..1u64 << len {
            let c = class_of[len][bits as usize];
            for a in 0..2u64 {
                let next = class_of[len + 1][(bits << 1 | a) as usize];
                match delta[c][a as usize] {
                    None => delta[c][a as usize] = Some(next),
                    Some(t) if t == next => {}
                    Some(_) => return Err(word_string(len + 1, bits << 1 | a)),
                }
            }
        }
    }
    let accepting = reps
        .iter()
        .map(|&(len, bits)| labels[len][bits as usize])
        .collect();
    let delta = delta
        .into_iter()
        .map(|row| row.into_iter().map(|t| t.expect("every class has a member of length <= d")).collect())
        .collect();
    Ok(Dfa::from_parts(Alphabet::binary(1), class_of[0][0], accepting, delta)
        .expect("hypothesis is complete")
        .minimize())
}

/// Checks the conjecture on every word up to `limit`. Once a prefix
/// contains `11`, the automaton must already be unable to accept.
fn verify(dfa: &Dfa, oracle: &impl Fn(&ZeckWord) -> bool, limit: usize) -> Result<(), String> {
    let live = dfa.live_states();
    let mut stack = vec![(0usize, 0u64, dfa.start())];
    while let Some((len, bits, state)) = stack.pop() {
        if !is_valid(bits) {
            if live[state] {
                return Err(word_string(len, bits));
            }
            continue;
        }
        if dfa.is_accepting(state) != oracle(&zeck_word(len, bits)) {
            return Err(word_string(len, bits));
        }
        if len < limit {
            for a in 0..2u64 {
                stack.push((len + 1, bits << 1 | a, dfa.step(state, a as usize)));
            }
        }
    }
    Ok(())
}

/// Builds the smallest automaton consistent with `oracle` on words up to
/// `depth`, then verifies it up to `depth + margin`.
pub fn synthesize_from_oracle(
    oracle: impl Fn(&ZeckWord) -> bool,
    depth: usize,
    margin: usize,
) -> Result<Dfa, AutomataError> {
    if depth == 0 || margin == 0 || depth > MAX_DEPTH {
        return Err(AutomataError::InvalidAutomaton(format!(
            "synthesis needs 1 <= depth <= {MAX_DEPTH} and margin >= 1, got depth {depth}, margin {margin}"
        )));
    }
    let labels = label_table(&oracle, depth);
    let mut witness = String::new();
    for d in 0..depth {
        match hypothesis(&labels, depth, d) {
            Ok(dfa) => {
                return match verify(&dfa, &oracle, depth + margin) {
                    Ok(()) => Ok(dfa),
                    Err(witness) => Err(AutomataError::InconsistentConjecture { witness }),
                };
            }
            Err(w) => witness = w,
        }
    }
    Err(AutomataError::InconsistentConjecture { witness })
}

#[cfg(test)]
mod tests {
    use super::super::regex_compile;
    use super::*;

    #[test]
    fn ends_in_one() {
        let d = synthesize_from_oracle(|w| w.bits().last() == Some(&true), 4, 2).unwrap();
        assert_eq!(d.num_states(), 3);
        // valid Zeckendorf words that end in 1
        let expected = regex_compile("(0|10)*1", &Alphabet::binary(1)).unwrap();
        assert_eq!(d.equivalent(&expected).unwrap(), None);
    }

    #[test]
    fn constant_false() {
        let d = synthesize_from_oracle(|_| false, 3, 1).unwrap();
        assert_eq!(d.num_states(), 1);
        assert!(d.is_empty_language());
    }

    #[test]
    fn shallow_depth_is_inconsistent() {
        // even values: needs more than one step of lookahead to pin down
        let oracle = |w: &ZeckWord| w.decode().unwrap().is_multiple_of(2);
        assert!(matches!(
            synthesize_from_oracle(oracle, 1, 5),
            Err(AutomataError::InconsistentConjecture { .. })
        ));
    }

    #[test]
    fn non_regular_oracle_is_caught() {
        // perfect squares are not Fibonacci-recognizable
        let oracle = |w: &ZeckWord| {
            let n = w.decode().unwrap();
            let r = (n as f64).sqrt() as u64;
            r * r == n || (r + 1) * (r + 1) == n
        };
        assert!(synthesize_from_oracle(oracle, 12, 5).is_err());
    }

    #[test]
    fn parameter_checks() {
        assert!(synthesize_from_oracle(|_| true, 0, 1).is_err());
        assert!(synthesize_from_oracle(|_| true, 2, 0).is_err());
        assert!(synthesize_from_oracle(|_| true, MAX_DEPTH + 1, 1).is_err());
    }
}
