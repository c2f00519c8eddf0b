//! Predicates on the φ-representations of positive integers.
//!
//! Everything here starts from `phi_expand(n)` and looks at which exponents
//! occur: whether the set is closed under negation, what doubling every
//! exponent does to the value, and how many exponents are even or odd.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::golden::{phi_expand, phi_power, GoldenError, PhiExpansion, ZPhi};
use crate::zeck::lucas_u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("{n} is out of domain; expected n >= {min}")]
    OutOfDomain { n: u64, min: u64 },
    #[error(transparent)]
    Golden(#[from] GoldenError),
    #[error("unknown sequence {0:?}; expected shevelev, one_even, one_odd or two_odd")]
    UnknownSequence(String),
}

/// Exponent-parity bookkeeping for one expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityProfile {
    pub even_count: usize,
    pub odd_count: usize,
    pub min_exponent: i64,
    /// Ascending.
    pub odd_exponents: Vec<i64>,
}

/// The φ-representation of a positive integer, with the derived predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    n: u64,
    expansion: PhiExpansion,
}

impl Profile {
    pub fn of(n: u64) -> Result<Profile, ClassifyError> {
        check_domain(n, 1)?;
        Ok(Profile {
            n,
            expansion: phi_expand(&ZPhi::from(n))?,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn expansion(&self) -> &PhiExpansion {
        &self.expansion
    }

    pub fn is_antipalindromic(&self) -> bool {
        let e = self.expansion.exponents();
        // descending order, so negation closure pairs e[i] with e[len-1-i]
        e.iter().zip(e.iter().rev()).all(|(&hi, &lo)| hi == -lo)
    }

    pub fn all_exponents_even(&self) -> bool {
        self.expansion.exponents().iter().all(|k| k % 2 == 0)
    }

    /// `Σ φ^(2k)` over the exponents `k`.
    pub fn kimberling_double(&self) -> ZPhi {
        self.expansion
            .exponents()
            .iter()
            .fold(ZPhi::zero(), |acc, &k| acc + phi_power(2 * k))
    }

    pub fn parity(&self) -> ParityProfile {
        let e = self.expansion.exponents();
        let mut odd_exponents: Vec<i64> = e.iter().copied().filter(|k| k % 2 != 0).collect();
        odd_exponents.reverse();
        ParityProfile {
            even_count: e.len() - odd_exponents.len(),
            odd_count: odd_exponents.len(),
            min_exponent: self.expansion.min_exponent().expect("n >= 1 has a nonempty expansion"),
            odd_exponents,
        }
    }

    pub fn two_odd_pair(&self) -> Option<(i64, i64)> {
        match self.parity().odd_exponents[..] {
            [q, p] => Some((p, q)),
            _ => None,
        }
    }

    pub fn summary(&self) -> Summary {
        Summary {
            n: self.n,
            expansion: self.expansion.clone(),
            antipalindromic: self.is_antipalindromic(),
            double: self.kimberling_double(),
            parity: self.parity(),
            min_exponent_bracket: min_exponent_bracket(self.n).ok(),
            two_odd_pair: self.two_odd_pair(),
        }
    }
}

/// Everything the classifier knows about one integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub n: u64,
    pub expansion: PhiExpansion,
    pub antipalindromic: bool,
    pub double: ZPhi,
    pub parity: ParityProfile,
    pub min_exponent_bracket: Option<u32>,
    pub two_odd_pair: Option<(i64, i64)>,
}

fn check_domain(n: u64, min: u64) -> Result<(), ClassifyError> {
    if n < min {
        Err(ClassifyError::OutOfDomain { n, min })
    } else {
        Ok(())
    }
}

/// Whether `t` occurs in the φ-representation of `n` exactly when `-t` does.
pub fn is_antipalindromic(n: u64) -> Result<bool, ClassifyError> {
    Ok(Profile::of(n)?.is_antipalindromic())
}

/// The value obtained by doubling every exponent of `n`'s φ-representation.
pub fn kimberling_double(n: u64) -> Result<ZPhi, ClassifyError> {
    Ok(Profile::of(n)?.kimberling_double())
}

/// Membership in Shevelev's set: the antipalindromic integers.
pub fn shevelev_member(n: u64) -> Result<bool, ClassifyError> {
    is_antipalindromic(n)
}

pub fn parity_profile(n: u64) -> Result<ParityProfile, ClassifyError> {
    Ok(Profile::of(n)?.parity())
}

/// The unique `i ≥ 1` with `L_{2i-1} < n ≤ L_{2i+1}`.
pub fn min_exponent_bracket(n: u64) -> Result<u32, ClassifyError> {
    check_domain(n, 2)?;
    let mut i = 1u32;
    loop {
        match lucas_u64(2 * i as usize + 1) {
            Some(upper) if n > upper => i += 1,
            // past the end of the u64 table every n is below the bound
            _ => return Ok(i),
        }
    }
}

/// The two odd exponents `(p, q)`, `p > q`, when there are exactly two.
pub fn two_odd_pair(n: u64) -> Result<Option<(i64, i64)>, ClassifyError> {
    Ok(Profile::of(n)?.two_odd_pair())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceKind {
    /// Antipalindromic expansions.
    Shevelev,
    /// Exactly one even exponent.
    OneEven,
    /// Exactly one odd exponent.
    OneOdd,
    /// Exactly two odd exponents.
    TwoOdd,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 4] = [
        SequenceKind::Shevelev,
        SequenceKind::OneEven,
        SequenceKind::OneOdd,
        SequenceKind::TwoOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Shevelev => "shevelev",
            SequenceKind::OneEven => "one_even",
            SequenceKind::OneOdd => "one_odd",
            SequenceKind::TwoOdd => "two_odd",
        }
    }

    pub fn contains(self, profile: &Profile) -> bool {
        match self {
            SequenceKind::Shevelev => profile.is_antipalindromic(),
            SequenceKind::OneEven => profile.parity().even_count == 1,
            SequenceKind::OneOdd => profile.parity().odd_count == 1,
            SequenceKind::TwoOdd => profile.parity().odd_count == 2,
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceKind {
    type Err = ClassifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.replace('-', "_");
        SequenceKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| ClassifyError::UnknownSequence(s.to_string()))
    }
}

/// Ascending members of the named set in `1..=limit`.
pub fn sequence(kind: SequenceKind, limit: u64) -> Result<Vec<u64>, ClassifyError> {
    check_domain(limit, 1)?;
    (1..=limit)
        .into_par_iter()
        .filter_map(|n| match Profile::of(n) {
            Ok(p) if kind.contains(&p) => Some(Ok(n)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antipalindromic_examples() {
        assert!(is_antipalindromic(25).unwrap());
        assert!(!is_antipalindromic(9).unwrap());
        assert!(is_antipalindromic(1).unwrap());
        assert_eq!(
            is_antipalindromic(0),
            Err(ClassifyError::OutOfDomain { n: 0, min: 1 })
        );
    }

    #[test]
    fn doubling_examples() {
        assert_eq!(kimberling_double(10).unwrap(), ZPhi::new(54, 0));
        assert_eq!(kimberling_double(9).unwrap(), ZPhi::new(53, -2));
        assert_eq!(kimberling_double(9).unwrap().sqrt5_form(), "52-√5");
        assert_eq!(kimberling_double(5).unwrap(), ZPhi::new(41, -14));
    }

    #[test]
    fn doubling_matches_independent_power_sum() {
        // 5 = φ³ + φ⁻¹ + φ⁻⁴, doubled: φ⁶ + φ⁻² + φ⁻⁸ by repeated multiplication
        let pow = |k: i64| {
            let base = if k >= 0 { ZPhi::phi() } else { ZPhi::new(-1, 1) };
            (0..k.abs()).fold(ZPhi::one(), |acc, _| &acc * &base)
        };
        assert_eq!(pow(6) + pow(-2) + pow(-8), ZPhi::new(41, -14));
    }

    #[test]
    fn shevelev_examples() {
        assert!(shevelev_member(10).unwrap());
        assert!(!shevelev_member(9).unwrap());
        assert!(shevelev_member(47).unwrap());
    }

    #[test]
    fn parity_examples() {
        let p = parity_profile(9).unwrap();
        assert_eq!((p.even_count, p.odd_count, p.min_exponent), (3, 1, -4));
        assert_eq!(p.odd_exponents, vec![1]);
        let p = parity_profile(5).unwrap();
        assert_eq!((p.even_count, p.odd_count, p.min_exponent), (1, 2, -4));
        assert_eq!(p.odd_exponents, vec![-1, 3]);
        let p = parity_profile(1).unwrap();
        assert_eq!((p.even_count, p.odd_count, p.min_exponent), (1, 0, 0));
    }

    #[test]
    fn brackets() {
        assert_eq!(min_exponent_bracket(5), Ok(2));
        assert_eq!(min_exponent_bracket(25), Ok(3));
        assert_eq!(min_exponent_bracket(2), Ok(1));
        assert_eq!(min_exponent_bracket(4), Ok(1));
        assert_eq!(min_exponent_bracket(29), Ok(3));
        assert_eq!(min_exponent_bracket(30), Ok(4));
        assert_eq!(
            min_exponent_bracket(1),
            Err(ClassifyError::OutOfDomain { n: 1, min: 2 })
        );
        assert!(min_exponent_bracket(u64::MAX).is_ok());
    }

    #[test]
    fn two_odd_examples() {
        assert_eq!(two_odd_pair(6).unwrap(), Some((3, 1)));
        assert_eq!(two_odd_pair(5).unwrap(), Some((3, -1)));
        assert_eq!(two_odd_pair(9).unwrap(), None);
    }

    #[test]
    fn printed_prefixes() {
        assert_eq!(
            sequence(SequenceKind::Shevelev, 47).unwrap(),
            vec![1, 3, 4, 7, 8, 10, 11, 18, 19, 21, 22, 25, 26, 28, 29, 47]
        );
        assert_eq!(
            sequence(SequenceKind::OneEven, 77).unwrap(),
            vec![1, 2, 5, 6, 12, 13, 16, 17, 30, 31, 34, 35, 41, 42, 45, 46, 77]
        );
        assert_eq!(
            sequence(SequenceKind::OneOdd, 197).unwrap(),
            vec![2, 9, 20, 27, 49, 56, 67, 74, 125, 132, 143, 150, 172, 179, 190, 197]
        );
    }

    #[test]
    fn sequence_kind_names() {
        for kind in SequenceKind::ALL {
            assert_eq!(kind.name().parse::<SequenceKind>().unwrap(), kind);
        }
        assert_eq!("one-even".parse::<SequenceKind>().unwrap(), SequenceKind::OneEven);
        assert!("three_odd".parse::<SequenceKind>().is_err());
        assert!(sequence(SequenceKind::Shevelev, 0).is_err());
    }

    #[test]
    fn summary_json_round_trip() {
        let s = Profile::of(9).unwrap().summary();
        let json = serde_json::to_string(&s).unwrap();
        let back: Summary = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
