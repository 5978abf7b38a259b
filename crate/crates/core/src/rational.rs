//! Exact rational helpers shared by every solver.
//!
//! All game quantities (coefficients, budget, costs, approximation factors)
//! are [`Rational`]s. Nothing in this crate rounds.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// Builds `numer / denom`. Panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn from_usize(value: usize) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Largest integer `<= x`.
pub fn floor_int(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// Smallest integer `>= x`.
pub fn ceil_int(x: &Rational) -> BigInt {
    x.numer().div_ceil(x.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational string")]
    Empty,
    #[error("malformed rational {0:?}: expected `p` or `p/q` with decimal digits")]
    Malformed(String),
    #[error("rational {0:?} has a zero denominator")]
    ZeroDenominator(String),
}

/// Parses the textual form `-?[0-9]+(/[1-9][0-9]*)?`.
///
/// Non-canonical inputs such as `6/4` are accepted and reduced.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let malformed = || ParseRationalError::Malformed(text.to_owned());
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = numer.strip_prefix('-').unwrap_or(numer);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let numer = BigInt::from_str(numer).map_err(|_| malformed())?;
    let denom = match denom {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            if d.starts_with('0') {
                return Err(ParseRationalError::ZeroDenominator(text.to_owned()));
            }
            BigInt::from_str(d).map_err(|_| malformed())?
        }
    };
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// Decimal rendering truncated toward zero, for human-facing output only.
pub fn to_decimal(x: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (x.abs() * Rational::from_integer(scale.clone())).to_integer();
    let (whole, frac) = scaled.div_rem(&scale);
    let sign = if x.is_negative() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!(
            "{sign}{whole}.{:0>width$}",
            frac.to_string(),
            width = digits
        )
    }
}

/// A rational or `+∞`.
///
/// `+∞` only ever means "no finite approximation factor suffices", e.g. a
/// player with positive cost who can move to a resource that costs nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    Finite(Rational),
    Infinite,
}

impl ExtendedRational {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtendedRational::Finite(x) => Some(x),
            ExtendedRational::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRational::Infinite)
    }

    /// `max(self, 1)`, the quality of a profile read as an approximate equilibrium.
    pub fn at_least_one(self) -> ExtendedRational {
        match self {
            ExtendedRational::Finite(x) if x < Rational::one() => {
                ExtendedRational::Finite(Rational::one())
            }
            other => other,
        }
    }

    /// `a / b` with `x / 0 = +∞` for `x > 0` and `0 / 0 = 0`.
    pub fn quotient(numer: &Rational, denom: &Rational) -> ExtendedRational {
        if denom.is_zero() {
            if numer.is_positive() {
                ExtendedRational::Infinite
            } else {
                ExtendedRational::Finite(Rational::zero())
            }
        } else {
            ExtendedRational::Finite(numer / denom)
        }
    }

    pub fn le_rational(&self, bound: &Rational) -> bool {
        match self {
            ExtendedRational::Finite(x) => x <= bound,
            ExtendedRational::Infinite => false,
        }
    }
}

impl From<Rational> for ExtendedRational {
    fn from(value: Rational) -> Self {
        ExtendedRational::Finite(value)
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedRational::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(x) => write!(f, "{x}"),
            ExtendedRational::Infinite => f.write_str("inf"),
        }
    }
}
