//! Exact arithmetic in the ring `Z[φ]` and finite base-φ expansions.
//!
//! Every element of `Z[φ]` is stored as a pair `(a, b)` standing for `a + bφ`,
//! with arbitrary-precision coefficients. Comparisons against zero are done
//! exactly with integer arithmetic, so the greedy expansion never touches a
//! floating point number.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::zeck::fib;

/// Step budget used by [`phi_expand`].
///
/// Expansions of integers up to `10^12` take well under two hundred steps, so
/// hitting this bound means something is broken rather than slow.
pub const DEFAULT_STEP_GUARD: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoldenError {
    #[error("cannot expand a negative number: {0}")]
    NegativeInput(ZPhi),
    #[error("greedy expansion exceeded its step guard of {0}")]
    IterationGuardExceeded(usize),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("adjacent ones at position {position}")]
    AdjacentOnes { position: usize },
    #[error("exponents {0} and {1} are adjacent")]
    AdjacentExponents(i64, i64),
    #[error("exponent {0} listed twice")]
    DuplicateExponent(i64),
    #[error("exponent list {exponents:?} does not match string {string:?}")]
    Mismatch { exponents: Vec<i64>, string: String },
}

/// An element `a + bφ` of `Z[φ]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPhi {
    /// Rational part.
    pub a: BigInt,
    /// Coefficient of φ.
    pub b: BigInt,
}

/// The four ring operations, for callers that pick one at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

impl ZPhi {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        ZPhi {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        ZPhi::new(n, 0)
    }

    pub fn zero() -> Self {
        ZPhi::default()
    }

    pub fn one() -> Self {
        ZPhi::new(1, 0)
    }

    /// The golden ratio itself.
    pub fn phi() -> Self {
        ZPhi::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero()
    }

    /// Applies `op`. `Neg` ignores `rhs`.
    pub fn apply(&self, op: ArithOp, rhs: &ZPhi) -> ZPhi {
        match op {
            ArithOp::Add => self + rhs,
            ArithOp::Sub => self - rhs,
            ArithOp::Mul => self * rhs,
            ArithOp::Neg => -self,
        }
    }

    /// Galois conjugation `φ ↦ 1 − φ`, i.e. `a + bφ ↦ (a + b) − bφ`.
    pub fn conjugate(&self) -> ZPhi {
        ZPhi {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// Exact sign of the real number `a + bφ`.
    ///
    /// With `u = 2a + b` we have `2(a + bφ) = u + b√5`, and the sign of that
    /// is settled by comparing `u²` against `5b²` when the two terms disagree.
    pub fn signum(&self) -> Ordering {
        let u: BigInt = &self.a * 2 + &self.b;
        let b = &self.b;
        match b.sign() {
            num_bigint::Sign::NoSign => u.cmp(&BigInt::zero()),
            num_bigint::Sign::Plus => {
                if !u.is_negative() {
                    Ordering::Greater
                } else {
                    (b * b * 5u8).cmp(&(&u * &u))
                }
            }
            num_bigint::Sign::Minus => {
                if !u.is_positive() {
                    Ordering::Less
                } else {
                    (&u * &u).cmp(&(b * b * 5u8))
                }
            }
        }
    }

    /// `self / φ`, using `φ⁻¹ = φ − 1`.
    pub fn div_phi(&self) -> ZPhi {
        ZPhi {
            a: &self.b - &self.a,
            b: self.a.clone(),
        }
    }

    /// `self · φ`, using `φ² = φ + 1`.
    pub fn mul_phi(&self) -> ZPhi {
        ZPhi {
            a: self.b.clone(),
            b: &self.a + &self.b,
        }
    }

    /// Writes the value as `(p + q√5) / 2`, returning `(p, q)`.
    pub fn sqrt5_halves(&self) -> (BigInt, BigInt) {
        (&self.a * 2 + &self.b, self.b.clone())
    }

    /// Human-readable form in terms of `√5`, e.g. `52-√5` or `(1+√5)/2`.
    pub fn sqrt5_form(&self) -> String {
        let (p, q) = self.sqrt5_halves();
        if p.is_even() && q.is_even() {
            format_surd(&(p / 2), &(q / 2))
        } else {
            format!("({})/2", format_surd(&p, &q))
        }
    }

    /// Rough floating value, for display only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * phi
    }
}

fn format_surd(rational: &BigInt, surd: &BigInt) -> String {
    let surd_part = |leading: bool| -> String {
        let sign = if surd.is_negative() {
            "-"
        } else if leading {
            ""
        } else {
            "+"
        };
        let mag = surd.abs();
        if mag.is_one() {
            format!("{sign}√5")
        } else {
            format!("{sign}{mag}√5")
        }
    };
    match (rational.is_zero(), surd.is_zero()) {
        (_, true) => rational.to_string(),
        (true, false) => surd_part(true),
        (false, false) => format!("{rational}{}", surd_part(false)),
    }
}

impl fmt::Display for ZPhi {
    /// Formats as `a+bφ`, dropping zero parts: `5`, `φ`, `53-2φ`, `-1+φ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if self.b.is_positive() {
                write!(f, "+")?;
            }
        }
        if self.b.is_one() {
            write!(f, "φ")
        } else if self.b == -BigInt::one() {
            write!(f, "-φ")
        } else {
            write!(f, "{}φ", self.b)
        }
    }
}

impl From<i64> for ZPhi {
    fn from(n: i64) -> Self {
        ZPhi::from_int(n)
    }
}

impl From<u64> for ZPhi {
    fn from(n: u64) -> Self {
        ZPhi::from_int(n)
    }
}

impl From<BigInt> for ZPhi {
    fn from(n: BigInt) -> Self {
        ZPhi::from_int(n)
    }
}

impl<'a> Add<&'a ZPhi> for &'a ZPhi {
    type Output = ZPhi;
    fn add(self, rhs: &'a ZPhi) -> ZPhi {
        ZPhi {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> Sub<&'a ZPhi> for &'a ZPhi {
    type Output = ZPhi;
    fn sub(self, rhs: &'a ZPhi) -> ZPhi {
        ZPhi {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'a> Mul<&'a ZPhi> for &'a ZPhi {
    type Output = ZPhi;
    /// `(a + bφ)(c + dφ) = (ac + bd) + (ad + bc + bd)φ`
    fn mul(self, rhs: &'a ZPhi) -> ZPhi {
        let bd = &self.b * &rhs.b;
        ZPhi {
            a: &self.a * &rhs.a + &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

impl Neg for &ZPhi {
    type Output = ZPhi;
    fn neg(self) -> ZPhi {
        ZPhi {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Neg for ZPhi {
    type Output = ZPhi;
    fn neg(self) -> ZPhi {
        ZPhi {
            a: -self.a,
            b: -self.b,
        }
    }
}

macro_rules! forward_owned {
    ($($imp:ident $method:ident),*) => {$(
        impl $imp<ZPhi> for ZPhi {
            type Output = ZPhi;
            fn $method(self, rhs: ZPhi) -> ZPhi {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $imp<&'a ZPhi> for ZPhi {
            type Output = ZPhi;
            fn $method(self, rhs: &'a ZPhi) -> ZPhi {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Ord for ZPhi {
    /// Orders by real value.
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl PartialOrd for ZPhi {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Serialize, Deserialize)]
struct ZPhiJson {
    a: String,
    b: String,
}

impl Serialize for ZPhi {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ZPhiJson {
            a: self.a.to_string(),
            b: self.b.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ZPhi {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = ZPhiJson::deserialize(deserializer)?;
        let a = raw.a.parse().map_err(serde::de::Error::custom)?;
        let b = raw.b.parse().map_err(serde::de::Error::custom)?;
        Ok(ZPhi { a, b })
    }
}

/// Exact value of `φ^k` for any integer `k`: `F_k·φ + F_{k−1}`.
pub fn phi_power(k: i64) -> ZPhi {
    ZPhi {
        a: fib(k - 1),
        b: fib(k),
    }
}

/// A finite φ-representation: a set of pairwise non-adjacent exponents.
///
/// Exponents are kept in descending order, most significant first. The empty
/// set represents zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PhiExpansion {
    exponents: Vec<i64>,
}

impl PhiExpansion {
    pub fn empty() -> Self {
        PhiExpansion::default()
    }

    /// Builds an expansion from exponents in any order, rejecting duplicates
    /// and adjacent pairs.
    pub fn from_exponents(exponents: impl IntoIterator<Item = i64>) -> Result<Self, GoldenError> {
        let mut exponents: Vec<i64> = exponents.into_iter().collect();
        exponents.sort_unstable_by(|x, y| y.cmp(x));
        for pair in exponents.windows(2) {
            match pair[0] - pair[1] {
                0 => return Err(GoldenError::DuplicateExponent(pair[0])),
                1 => return Err(GoldenError::AdjacentExponents(pair[1], pair[0])),
                _ => {}
            }
        }
        Ok(PhiExpansion { exponents })
    }

    /// Exponents in descending order.
    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn contains(&self, k: i64) -> bool {
        self.exponents.contains(&k)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.exponents.first().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.exponents.last().copied()
    }

    /// The exact value `Σ φ^k`.
    pub fn eval(&self) -> ZPhi {
        phi_eval(self)
    }

    /// Binary string with a radix point, e.g. `1000.1001` for five.
    pub fn render(&self) -> String {
        render(self)
    }
}

impl fmt::Display for PhiExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for PhiExpansion {
    type Err = GoldenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[derive(Serialize, Deserialize)]
struct PhiExpansionJson {
    exponents: Vec<i64>,
    string: String,
}

impl Serialize for PhiExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PhiExpansionJson {
            exponents: self.exponents.clone(),
            string: self.render(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PhiExpansion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PhiExpansionJson::deserialize(deserializer)?;
        let from_list =
            PhiExpansion::from_exponents(raw.exponents.iter().copied()).map_err(serde::de::Error::custom)?;
        let from_string = parse(&raw.string).map_err(serde::de::Error::custom)?;
        if from_list != from_string {
            return Err(serde::de::Error::custom(GoldenError::Mismatch {
                exponents: raw.exponents,
                string: raw.string,
            }));
        }
        Ok(from_list)
    }
}

/// Sum of `φ^k` over the exponents.
pub fn phi_eval(e: &PhiExpansion) -> ZPhi {
    e.exponents
        .iter()
        .fold(ZPhi::zero(), |acc, &k| acc + phi_power(k))
}

/// Greedy φ-representation of a non-negative element of `Z[φ]`.
pub fn phi_expand(x: &ZPhi) -> Result<PhiExpansion, GoldenError> {
    phi_expand_bounded(x, DEFAULT_STEP_GUARD)
}

/// [`phi_expand`] with an explicit bound on the number of comparison steps.
pub fn phi_expand_bounded(x: &ZPhi, max_steps: usize) -> Result<PhiExpansion, GoldenError> {
    match x.signum() {
        Ordering::Less => return Err(GoldenError::NegativeInput(x.clone())),
        Ordering::Equal => return Ok(PhiExpansion::empty()),
        Ordering::Greater => {}
    }
    let mut steps = 0usize;
    let mut tick = || {
        steps += 1;
        if steps > max_steps {
            Err(GoldenError::IterationGuardExceeded(max_steps))
        } else {
            Ok(())
        }
    };

    let mut rest = x.clone();
    let top = largest_power_at_most(&rest, &mut tick)?;
    let mut exponents = vec![top];
    rest = &rest - &phi_power(top);

    // After taking φ^k the remainder is below φ^(k-1), so the next exponent
    // is at most k-2 and a downward scan finds it.
    let mut k = top - 2;
    let mut power = phi_power(k);
    while !rest.is_zero() {
        tick()?;
        if power <= rest {
            rest = &rest - &power;
            exponents.push(k);
            k -= 2;
            power = power.div_phi().div_phi();
        } else {
            k -= 1;
            power = power.div_phi();
        }
    }
    Ok(PhiExpansion { exponents })
}

/// Largest `k` with `φ^k ≤ x`, for `x > 0`. Gallops away from zero by
/// doubling, then bisects.
fn largest_power_at_most(
    x: &ZPhi,
    tick: &mut impl FnMut() -> Result<(), GoldenError>,
) -> Result<i64, GoldenError> {
    // Invariant once bracketed: φ^lo ≤ x < φ^hi.
    let (mut lo, mut hi);
    if ZPhi::one() <= *x {
        lo = 0i64;
        hi = 1i64;
        while phi_power(hi) <= *x {
            tick()?;
            lo = hi;
            hi *= 2;
        }
    } else {
        hi = 0i64;
        lo = -1i64;
        while phi_power(lo) > *x {
            tick()?;
            hi = lo;
            lo *= 2;
        }
    }
    while hi - lo > 1 {
        tick()?;
        let mid = lo + (hi - lo) / 2;
        if phi_power(mid) <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Renders digits from `max(t, 0)` down to the least exponent, with a radix
/// point only when negative exponents are present. Zero renders as `0`.
pub fn render(e: &PhiExpansion) -> String {
    let Some(top) = e.max_exponent() else {
        return "0".to_string();
    };
    let bottom = e.min_exponent().unwrap_or(0);
    let high = top.max(0);
    let mut out = String::with_capacity((high - bottom.min(0) + 2) as usize);
    let mut iter = e.exponents.iter().peekable();
    let mut k = high;
    while k >= bottom.min(0) {
        if k == -1 {
            out.push('.');
        }
        if iter.peek() == Some(&&k) {
            iter.next();
            out.push('1');
        } else {
            out.push('0');
        }
        k -= 1;
    }
    out
}

/// Parses the canonical binary form produced by [`render`].
///
/// A trailing point with no fractional digits (`1000.`) is accepted.
pub fn parse(s: &str) -> Result<PhiExpansion, GoldenError> {
    let err = |position: usize, message: &str| GoldenError::Parse {
        position,
        message: message.to_string(),
    };
    if s.is_empty() {
        return Err(err(0, "empty input"));
    }
    let mut point = None;
    for (i, c) in s.char_indices() {
        match c {
            '0' | '1' => {}
            '.' if point.is_none() => point = Some(i),
            '.' => return Err(err(i, "second radix point")),
            _ => return Err(err(i, "expected 0, 1 or '.'")),
        }
    }
    let (int_part, frac_part) = match point {
        Some(p) => (&s[..p], &s[p + 1..]),
        None => (s, ""),
    };
    if int_part.is_empty() {
        return Err(err(0, "missing integer part"));
    }
    if int_part.len() > 1 && int_part.starts_with('0') {
        return Err(err(0, "leading zero"));
    }
    if frac_part.ends_with('0') {
        return Err(err(s.len() - 1, "trailing zero in fractional part"));
    }

    let mut exponents = Vec::new();
    let mut prev_one = false;
    let mut k = int_part.len() as i64 - 1;
    for (i, c) in s.char_indices() {
        if c == '.' {
            continue;
        }
        let one = c == '1';
        if one && prev_one {
            return Err(GoldenError::AdjacentOnes { position: i });
        }
        if one {
            exponents.push(k);
        }
        prev_one = one;
        k -= 1;
    }
    Ok(PhiExpansion { exponents })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(a: i64, b: i64) -> ZPhi {
        ZPhi::new(a, b)
    }

    fn exps(v: &[i64]) -> PhiExpansion {
        PhiExpansion::from_exponents(v.iter().copied()).unwrap()
    }

    #[test]
    fn ring_operations() {
        assert_eq!(z(2, 0).apply(ArithOp::Add, &z(3, 0)), z(5, 0));
        assert_eq!(z(1, 1).apply(ArithOp::Mul, &z(0, 1)), z(1, 2));
        assert_eq!(z(0, 1).apply(ArithOp::Sub, &z(1, 0)), z(-1, 1));
        assert_eq!(z(3, -2).apply(ArithOp::Neg, &ZPhi::zero()), z(-3, 2));
        // φ - 1 is the inverse of φ
        assert_eq!(&z(-1, 1) * &ZPhi::phi(), ZPhi::one());
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(0, 1).conjugate(), z(1, -1));
        assert_eq!(z(5, 0).conjugate(), z(5, 0));
        assert_eq!(z(3, -2).conjugate().conjugate(), z(3, -2));
        let (x, y) = (z(4, -7), z(-2, 5));
        assert_eq!((&x * &y).conjugate(), &x.conjugate() * &y.conjugate());
        assert_eq!((&x + &y).conjugate(), &x.conjugate() + &y.conjugate());
    }

    #[test]
    fn signs() {
        assert_eq!(z(1, -1).signum(), Ordering::Less);
        assert_eq!(z(0, 0).signum(), Ordering::Equal);
        assert_eq!(z(-1, 1).signum(), Ordering::Greater);
        // 2 - φ > 0 but 1 - φ < 0; -2 + φ < 0
        assert_eq!(z(2, -1).signum(), Ordering::Greater);
        assert_eq!(z(-2, 1).signum(), Ordering::Less);
        // consecutive Fibonacci ratios alternate around φ
        assert_eq!(z(89, -55).signum(), Ordering::Greater);
        assert_eq!(z(144, -89).signum(), Ordering::Less);
    }

    #[test]
    fn powers() {
        assert_eq!(phi_power(0), z(1, 0));
        assert_eq!(phi_power(-2), z(2, -1));
        assert_eq!(phi_power(6), z(5, 8));
        assert_eq!(phi_power(-1), z(-1, 1));
    }

    #[test]
    fn powers_match_repeated_multiplication() {
        let mut up = ZPhi::one();
        let mut down = ZPhi::one();
        let inv = z(-1, 1);
        for k in 0..60 {
            assert_eq!(phi_power(k), up);
            assert_eq!(phi_power(-k), down);
            up = &up * &ZPhi::phi();
            down = &down * &inv;
        }
    }

    #[test]
    fn expansions_from_known_values() {
        assert_eq!(phi_expand(&z(5, 0)).unwrap().exponents(), &[3, -1, -4]);
        assert_eq!(phi_expand(&z(2, 0)).unwrap().exponents(), &[1, -2]);
        assert_eq!(phi_expand(&z(25, 0)).unwrap().exponents(), &[6, 4, -4, -6]);
        assert!(phi_expand(&ZPhi::zero()).unwrap().is_empty());
        // sub-unit input: φ⁻¹
        assert_eq!(phi_expand(&z(-1, 1)).unwrap().exponents(), &[-1]);
    }

    #[test]
    fn expansion_errors() {
        assert_eq!(
            phi_expand(&z(-1, 0)),
            Err(GoldenError::NegativeInput(z(-1, 0)))
        );
        assert_eq!(
            phi_expand_bounded(&z(1_000_000, 0), 3),
            Err(GoldenError::IterationGuardExceeded(3))
        );
    }

    #[test]
    fn evaluation() {
        assert_eq!(phi_eval(&exps(&[3, -1, -4])), z(5, 0));
        assert_eq!(phi_eval(&PhiExpansion::empty()), z(0, 0));
        assert_eq!(phi_eval(&exps(&[6, 4, -4, -6])), z(25, 0));
    }

    #[test]
    fn exponent_validation() {
        assert_eq!(
            PhiExpansion::from_exponents([2, 3]),
            Err(GoldenError::AdjacentExponents(2, 3))
        );
        assert_eq!(
            PhiExpansion::from_exponents([0, 0]),
            Err(GoldenError::DuplicateExponent(0))
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(render(&exps(&[3, -1, -4])), "1000.1001");
        assert_eq!(render(&exps(&[0])), "1");
        assert_eq!(render(&exps(&[1, -2])), "10.01");
        assert_eq!(render(&PhiExpansion::empty()), "0");
        assert_eq!(render(&exps(&[6, 4, -4, -6])), "1010000.000101");
        assert_eq!(render(&exps(&[-2])), "0.01");
        assert_eq!(render(&exps(&[2])), "100");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse("1000.1001").unwrap(), exps(&[3, -1, -4]));
        assert_eq!(parse("1000.").unwrap(), exps(&[3]));
        assert_eq!(parse("0").unwrap(), PhiExpansion::empty());
        assert_eq!(parse("0.01").unwrap(), exps(&[-2]));
        assert_eq!(parse("10.01").unwrap(), exps(&[1, -2]));
    }

    #[test]
    fn parse_errors() {
        let pos = |s: &str| match parse(s) {
            Err(GoldenError::Parse { position, .. }) => position,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos(""), 0);
        assert_eq!(pos("10a"), 2);
        assert_eq!(pos("1.0.1"), 3);
        assert_eq!(pos("010"), 0);
        assert_eq!(pos("10.10"), 4);
        assert_eq!(pos(".1"), 0);
        assert_eq!(parse("1.1"), Err(GoldenError::AdjacentOnes { position: 2 }));
        assert_eq!(parse("1011"), Err(GoldenError::AdjacentOnes { position: 3 }));
    }

    #[test]
    fn json_forms() {
        let x = z(53, -2);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"a":"53","b":"-2"}"#);
        assert_eq!(serde_json::from_str::<ZPhi>(&s).unwrap(), x);

        let e = exps(&[3, -1, -4]);
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"{"exponents":[3,-1,-4],"string":"1000.1001"}"#);
        assert_eq!(serde_json::from_str::<PhiExpansion>(&s).unwrap(), e);
        assert!(serde_json::from_str::<PhiExpansion>(r#"{"exponents":[3],"string":"1"}"#).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(z(53, -2).to_string(), "53-2φ");
        assert_eq!(z(0, 1).to_string(), "φ");
        assert_eq!(z(-1, 1).to_string(), "-1+φ");
        assert_eq!(z(54, 0).to_string(), "54");
        assert_eq!(z(53, -2).sqrt5_form(), "52-√5");
        assert_eq!(z(0, 1).sqrt5_form(), "(1+√5)/2");
        assert_eq!(z(-1, 2).sqrt5_form(), "√5");
    }
}
