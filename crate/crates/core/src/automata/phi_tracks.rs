//! The two-track view of a φ-representation: integer digits `y` and reversed
//! fractional digits `z`, so that `y.reverse(z)` is the representation.
//!
//! In both tracks the last symbol is position 1. Position `p` of `y` is the
//! exponent `p - 1`; position `p` of `z` is the exponent `-p`.

use std::collections::BTreeSet;

use crate::golden::{phi_expand, GoldenError, PhiExpansion, ZPhi};

/// Splits an expansion into its `(y, z)` tracks, without padding.
pub fn expansion_tracks(e: &PhiExpansion) -> (String, String) {
    let digit = |k: i64| if e.contains(k) { '1' } else { '0' };
    let top = e.max_exponent().unwrap_or(-1);
    let bottom = e.min_exponent().unwrap_or(0);
    let y = (0..=top).rev().map(digit).collect();
    let z = (bottom..0).map(digit).collect();
    (y, z)
}

/// The `(y, z)` tracks of `n`.
pub fn phi_tracks(n: u64) -> Result<(String, String), GoldenError> {
    Ok(expansion_tracks(&phi_expand(&ZPhi::from(n))?))
}

fn exponents_of(y: &str, z: &str) -> Option<BTreeSet<i64>> {
    let mut set = BTreeSet::new();
    for (j, c) in y.chars().rev().enumerate() {
        match c {
            '1' => {
                set.insert(j as i64);
            }
            '0' => {}
            _ => return None,
        }
    }
    for (j, c) in z.chars().rev().enumerate() {
        match c {
            '1' => {
                set.insert(-(j as i64) - 1);
            }
            '0' => {}
            _ => return None,
        }
    }
    Some(set)
}

/// Whether `y.reverse(z)` spells the φ-representation of `n`, leading zeros
/// on either track allowed.
pub fn check_phi_rep(n: u64, y: &str, z: &str) -> bool {
    let Some(claimed) = exponents_of(y, z) else {
        return false;
    };
    match phi_expand(&ZPhi::from(n)) {
        Ok(e) => e.exponents().iter().copied().collect::<BTreeSet<_>>() == claimed,
        Err(_) => false,
    }
}
