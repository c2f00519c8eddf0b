use std::time::Instant;

use rayon::prelude::*;

use super::{Claim, Counterexample, Report};
use crate::automata::{Alphabet, Builtin, Dfa};
use crate::zeck::{fib_u64, lucas_u64};

/// Bits at odd positions, counting from the right end as position 1.
const ODD: u32 = 0x5555_5555;
const EVEN: u32 = 0xAAAA_AAAA;

/// Longest word the bitmask encoding supports.
pub const MAX_WORD_LENGTH: usize = 31;

fn valid(w: u32) -> bool {
    w & (w >> 1) == 0
}

/// Zeckendorf value: bit `j` (position `j+1`) weighs `F_{j+2}`.
fn zeck_value(w: u32) -> u64 {
    (0..32)
        .filter(|j| w >> j & 1 == 1)
        .map(|j| fib_u64(j + 2).expect("table covers 32 positions"))
        .sum()
}

fn is_even_lucas(v: u64) -> bool {
    (0..).step_by(2).map_while(lucas_u64).take_while(|&l| l <= v).any(|l| l == v)
}

fn is_even_fib(v: u64) -> bool {
    (2..).step_by(2).map_while(fib_u64).take_while(|&f| f <= v).any(|f| f == v)
}

/// What each builtin is supposed to mean, computed directly on the word.
///
/// `tracks[t]` holds track `t` of a word of length `len`, the first symbol in
/// the most significant bit, so bit `j` is position `j + 1` from the end.
pub fn builtin_semantics(b: Builtin, len: usize, tracks: &[u32]) -> bool {
    assert!(len <= MAX_WORD_LENGTH);
    let w = tracks[0];
    let top = |v: u32| len > 0 && v >> (len - 1) & 1 == 1;
    match b {
        Builtin::NoOdd1 => w & ODD == 0,
        Builtin::NoEven1 => w & EVEN == 0,
        Builtin::OneOdd1 => (w & ODD).count_ones() == 1,
        Builtin::OneEven1 => (w & EVEN).count_ones() == 1,
        Builtin::TwoOdd1 => (w & ODD).count_ones() == 2,
        Builtin::TwoEven1 => (w & EVEN).count_ones() == 2,
        // the leading 1 is at bit 31 - lz, i.e. position 32 - lz
        Builtin::LargestEven => w != 0 && w.leading_zeros().is_multiple_of(2),
        Builtin::IsEvenLucas => valid(w) && is_even_lucas(zeck_value(w)),
        Builtin::IsEvenFib => valid(w) && is_even_fib(zeck_value(w)),
        Builtin::End1 => w & 1 == 1,
        Builtin::ShiftL => {
            let (x, y) = (w, tracks[1]);
            let mask = if len == 0 { 0 } else { u32::MAX >> (32 - len) };
            !top(x) && y == (x << 1) & mask
        }
        Builtin::ShiftR => tracks[1] == w >> 1,
        Builtin::FibLuc => {
            let (x, y) = (w, tracks[1]);
            if !valid(x) || !valid(y) {
                return false;
            }
            let (xv, yv) = (zeck_value(x), zeck_value(y));
            // F_2 = 1, L_2 = 3 may be padded; larger pairs start at the first symbol
            if (xv, yv) == (1, 3) {
                return true;
            }
            top(y)
                && (3..)
                    .map_while(|i| Some((fib_u64(i)?, lucas_u64(i)?)))
                    .take_while(|&(f, _)| f <= xv)
                    .any(|pair| pair == (xv, yv))
        }
        Builtin::LargestDig => {
            let (x, y) = (w, tracks[1]);
            y.count_ones() == 1 && x & y != 0 && (x as u64) < (y as u64) << 1
        }
        Builtin::FibMatch => {
            let (x, y) = (w, tracks[1]);
            y.count_ones() == 1 && x & y != 0
        }
    }
}

fn word_string(alphabet: &Alphabet, symbols: &[usize]) -> String {
    if symbols.is_empty() {
        return "()".to_string();
    }
    symbols.iter().map(|&s| alphabet.symbol(s).to_string()).collect()
}

fn push_symbol(tracks: &mut [u32], symbol: usize) {
    let k = tracks.len();
    for (t, v) in tracks.iter_mut().enumerate() {
        *v = *v << 1 | (symbol >> (k - 1 - t) & 1) as u32;
    }
}

/// Depth-first over all words extending `prefix` up to `max_len`; returns the
/// first word (in lexicographic order by length-then-symbol DFS) that
/// disagrees.
fn search(
    b: Builtin,
    dfa: &Dfa,
    max_len: usize,
    prefix: &mut Vec<usize>,
    state: usize,
    tracks: &mut [u32],
) -> Option<Vec<usize>> {
    if dfa.is_accepting(state) != builtin_semantics(b, prefix.len(), tracks) {
        return Some(prefix.clone());
    }
    if prefix.len() == max_len {
        return None;
    }
    let saved: Vec<u32> = tracks.to_vec();
    for s in 0..dfa.alphabet().len() {
        push_symbol(tracks, s);
        prefix.push(s);
        let found = search(b, dfa, max_len, prefix, dfa.step(state, s), tracks);
        prefix.pop();
        tracks.copy_from_slice(&saved);
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Checks one builtin on every word up to length `max_len`.
pub fn sweep_builtin(b: Builtin, max_len: usize) -> Result<(), String> {
    assert!(max_len <= MAX_WORD_LENGTH);
    let dfa = b.compile();
    let sigma = dfa.alphabet().len();
    let arity = b.arity();
    if dfa.is_accepting(dfa.start()) != builtin_semantics(b, 0, &vec![0; arity]) {
        return Err("()".to_string());
    }
    if max_len == 0 {
        return Ok(());
    }
    // one independent subtree per first symbol
    let found = (0..sigma).into_par_iter().find_map_first(|s| {
        let mut tracks = vec![0u32; arity];
        push_symbol(&mut tracks, s);
        let mut prefix = vec![s];
        search(b, &dfa, max_len, &mut prefix, dfa.step(dfa.start(), s), &mut tracks)
    });
    match found {
        Some(word) => Err(word_string(dfa.alphabet(), &word)),
        None => Ok(()),
    }
}

/// Every builtin against its coded meaning on all words up to length
/// `max_len` (clamped to [`MAX_WORD_LENGTH`]).
pub fn verify_builtins(max_len: usize) -> Report {
    let start = Instant::now();
    let max_len = max_len.min(MAX_WORD_LENGTH);
    let mut report = Report::new(Claim::Builtins, 0, max_len as u64);
    for b in Builtin::ALL {
        if let Err(word) = sweep_builtin(b, max_len) {
            let why = format!("{b} disagrees with its meaning on {word}");
            return report.fail(Counterexample::Word(format!("{b}:{word}")), why).timed(start);
        }
    }
    report.details = format!("{} builtins agree on all words up to length {max_len}", Builtin::ALL.len());
    report.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> u32 {
        u32::from_str_radix(s, 2).unwrap_or(0)
    }

    #[test]
    fn semantics_spot_checks() {
        assert!(builtin_semantics(Builtin::LargestEven, 2, &[bits("10")]));
        assert!(!builtin_semantics(Builtin::LargestEven, 3, &[bits("100")]));
        assert!(builtin_semantics(Builtin::NoOdd1, 4, &[bits("1010")]));
        assert!(builtin_semantics(Builtin::IsEvenLucas, 3, &[bits("100")]));
        assert!(builtin_semantics(Builtin::IsEvenFib, 1, &[bits("1")]));
        assert!(!builtin_semantics(Builtin::IsEvenFib, 2, &[bits("10")]));
        assert!(builtin_semantics(Builtin::ShiftL, 3, &[bits("011"), bits("110")]));
        assert!(builtin_semantics(Builtin::ShiftR, 3, &[bits("011"), bits("001")]));
        assert!(builtin_semantics(Builtin::FibLuc, 4, &[bits("0001"), bits("0100")]));
        assert!(builtin_semantics(Builtin::FibLuc, 3, &[bits("010"), bits("101")]));
        assert!(!builtin_semantics(Builtin::FibLuc, 4, &[bits("0010"), bits("0101")]));
        assert!(builtin_semantics(Builtin::LargestDig, 3, &[bits("101"), bits("100")]));
        assert!(!builtin_semantics(Builtin::LargestDig, 3, &[bits("101"), bits("001")]));
        assert!(builtin_semantics(Builtin::FibMatch, 3, &[bits("101"), bits("001")]));
    }

    #[test]
    fn end1_short_sweep() {
        assert_eq!(sweep_builtin(Builtin::End1, 6), Ok(()));
    }

    #[test]
    fn all_builtins_short_sweep() {
        let r = verify_builtins(8);
        assert!(r.passed, "{r}");
    }

    #[test]
    fn wrong_meaning_is_caught() {
        // the end1 automaton checked against the noodd1 meaning
        let dfa = Builtin::End1.compile();
        let mut prefix = Vec::new();
        let mut tracks = [0u32];
        let found = search(Builtin::NoOdd1, &dfa, 4, &mut prefix, dfa.start(), &mut tracks);
        assert_eq!(found, Some(vec![]));
    }
}
