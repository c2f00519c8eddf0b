//! Zeckendorf and Lucas encodings of natural numbers.
//!
//! Words are msd-first. In a [`ZeckWord`] the rightmost bit weighs `F_2 = 1`;
//! in a [`LucasWord`] the rightmost bit weighs `L_0 = 2`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZeckError {
    #[error("Lucas numbers are indexed from 0, got {0}")]
    NegativeIndex(i64),
    #[error("adjacent ones at position {position}")]
    AdjacentOnes { position: usize },
    #[error("invalid character {found:?} at position {position}")]
    InvalidChar { position: usize, found: char },
    #[error("value does not fit in 64 bits")]
    Overflow,
}

/// `F_i` for any integer `i`, using `F_{-n} = (-1)^{n+1} F_n` below zero.
pub fn fib(i: i64) -> BigInt {
    let n = i.unsigned_abs();
    let (mut x, mut y) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &x + &y;
        x = std::mem::replace(&mut y, next);
    }
    if i < 0 && n.is_multiple_of(2) {
        -x
    } else {
        x
    }
}

/// `L_i = φ^i + φ̄^i` for `i ≥ 0`.
pub fn lucas(i: i64) -> Result<BigInt, ZeckError> {
    if i < 0 {
        return Err(ZeckError::NegativeIndex(i));
    }
    let (mut x, mut y) = (BigInt::from(2), BigInt::one());
    for _ in 0..i {
        let next = &x + &y;
        x = std::mem::replace(&mut y, next);
    }
    Ok(x)
}

fn fib_table() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| u64_recurrence(0, 1))
}

fn lucas_table() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| u64_recurrence(2, 1))
}

fn u64_recurrence(first: u64, second: u64) -> Vec<u64> {
    let mut v = vec![first, second];
    while let Some(next) = v[v.len() - 2].checked_add(v[v.len() - 1]) {
        v.push(next);
    }
    v
}

/// `F_i` when it fits in a `u64` (`i ≤ 93`).
pub fn fib_u64(i: usize) -> Option<u64> {
    fib_table().get(i).copied()
}

/// `L_i` when it fits in a `u64`.
pub fn lucas_u64(i: usize) -> Option<u64> {
    lucas_table().get(i).copied()
}

/// Zeckendorf word, most significant bit first. Leading zeros are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ZeckWord {
    bits: Vec<bool>,
}

impl ZeckWord {
    pub fn from_bits(bits: Vec<bool>) -> Result<Self, ZeckError> {
        if let Some(i) = bits.windows(2).position(|w| w[0] && w[1]) {
            return Err(ZeckError::AdjacentOnes { position: i + 1 });
        }
        Ok(ZeckWord { bits })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The same word without leading zeros.
    pub fn canonical(&self) -> ZeckWord {
        let start = self.bits.iter().position(|&b| b).unwrap_or(self.bits.len());
        ZeckWord {
            bits: self.bits[start..].to_vec(),
        }
    }

    pub fn decode(&self) -> Result<u64, ZeckError> {
        zeck_decode(self)
    }
}

impl fmt::Display for ZeckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&bits_to_string(&self.bits))
    }
}

impl FromStr for ZeckWord {
    type Err = ZeckError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ZeckWord::from_bits(bits_from_str(s)?)
    }
}

/// Lucas-weighted word, most significant bit first. Any subset is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LucasWord {
    bits: Vec<bool>,
}

impl LucasWord {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        LucasWord { bits }
    }

    /// Word with ones at the given Lucas indices.
    pub fn from_indices(indices: &BTreeSet<u32>) -> Self {
        let len = indices.iter().next_back().map_or(0, |&top| top as usize + 1);
        let mut bits = vec![false; len];
        for &i in indices {
            bits[len - 1 - i as usize] = true;
        }
        LucasWord { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `Σ b_i L_i`.
    pub fn value(&self) -> Result<u64, ZeckError> {
        weighted_sum(&self.bits, lucas_u64)
    }
}

impl fmt::Display for LucasWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&bits_to_string(&self.bits))
    }
}

impl FromStr for LucasWord {
    type Err = ZeckError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(LucasWord::from_bits(bits_from_str(s)?))
    }
}

fn bits_from_str(s: &str) -> Result<Vec<bool>, ZeckError> {
    s.chars()
        .enumerate()
        .map(|(position, c)| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            found => Err(ZeckError::InvalidChar { position, found }),
        })
        .collect()
}

fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Sums `weight(j)` over set bits, where `j` is the distance from the right end.
fn weighted_sum(bits: &[bool], weight: impl Fn(usize) -> Option<u64>) -> Result<u64, ZeckError> {
    bits.iter()
        .rev()
        .enumerate()
        .filter(|(_, &b)| b)
        .try_fold(0u64, |acc, (j, _)| {
            weight(j)
                .and_then(|w| acc.checked_add(w))
                .ok_or(ZeckError::Overflow)
        })
}

/// Greedy Zeckendorf encoding with no leading zeros; zero encodes as the
/// empty word.
pub fn zeck_encode(n: u64) -> ZeckWord {
    let fibs = fib_table();
    // weights F_2, F_3, ... ; the largest index with F_i <= n
    let Some(top) = (2..fibs.len()).rev().find(|&i| fibs[i] <= n) else {
        return ZeckWord::default();
    };
    let mut rest = n;
    let bits = (2..=top)
        .rev()
        .map(|i| {
            let take = fibs[i] <= rest;
            if take {
                rest -= fibs[i];
            }
            take
        })
        .collect();
    debug_assert_eq!(rest, 0);
    ZeckWord { bits }
}

pub fn zeck_decode(w: &ZeckWord) -> Result<u64, ZeckError> {
    weighted_sum(&w.bits, |j| fib_u64(j + 2))
}

/// Which Lucas indices a decomposition may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(k: i64) -> Parity {
        if k.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Writes `m` as a sum of distinct Lucas numbers `L_i` with `i` of the given
/// parity and `i ≥ min_index`, or returns `None` when no such sum exists.
///
/// Each single-parity family of Lucas numbers is super-increasing, so the
/// greedy choice is forced and the answer is unique.
pub fn lucas_subset_decompose(m: u64, parity: Parity, min_index: u32) -> Option<BTreeSet<u32>> {
    let lucas = lucas_table();
    let mut rest = m;
    let mut chosen = BTreeSet::new();
    let candidates = (min_index as usize..lucas.len())
        .filter(|&i| Parity::of(i as i64) == parity)
        .rev();
    for i in candidates {
        if lucas[i] <= rest {
            rest -= lucas[i];
            chosen.insert(i as u32);
        }
    }
    (rest == 0).then_some(chosen)
}

/// Converts a Lucas-weighted word into the Zeckendorf word of the same value.
pub fn luc_to_fib(w: &LucasWord) -> Result<ZeckWord, ZeckError> {
    Ok(zeck_encode(w.value()?))
}
