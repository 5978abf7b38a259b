//! The universal approximation threshold `K`, the real root of
//! `x^3 - x^2/2 - 1` in `(1, 2)` (about 1.1974).
//!
//! `K` is irrational, so it is bracketed on the decimal grid `10^-p` by
//! exact bisection and returned as the grid point below or above it.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use crate::rational::{from_usize, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    TowardZero,
    AwayFromZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KConstant {
    pub value: Rational,
    pub rounding: Rounding,
    pub precision: u32,
}

/// `x^3 - x^2/2 - 1`.
pub fn k_polynomial(x: &Rational) -> Rational {
    let square = x * x;
    &square * x - square / from_usize(2) - Rational::one()
}

/// Sign of the polynomial at `numer / denom` without leaving the integers:
/// `2 N^3 - N^2 D - 2 D^3` has the sign of `p(N/D)` for `D > 0`.
fn sign_on_grid(numer: &BigInt, denom: &BigInt) -> Sign {
    let n2 = numer * numer;
    let value =
        BigInt::from(2) * &n2 * numer - &n2 * denom - BigInt::from(2) * denom * denom * denom;
    value.sign()
}

/// Brackets `K` between consecutive multiples of `10^-precision` and returns
/// the lower (`TowardZero`) or upper (`AwayFromZero`) one.
pub fn compute_k(precision: u32, rounding: Rounding) -> KConstant {
    let scale = BigInt::from(10u32).pow(precision);
    // p(1) = -1/2 < 0 < 5 = p(2)
    let mut lo = scale.clone();
    let mut hi = &scale * 2;
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        match sign_on_grid(&mid, &scale) {
            Sign::Minus => lo = mid,
            Sign::Plus => hi = mid,
            // K is irrational, so no grid point is an exact root
            Sign::NoSign => unreachable!("K is irrational"),
        }
    }
    let numer = match rounding {
        Rounding::TowardZero => lo,
        Rounding::AwayFromZero => hi,
    };
    KConstant {
        value: Rational::new(numer, scale),
        rounding,
        precision,
    }
}

/// Rational upper bound on `K` within `10^-precision`.
pub fn k_upper(precision: u32) -> Rational {
    compute_k(precision, Rounding::AwayFromZero).value
}

/// Rational lower bound on `K` within `10^-precision`.
pub fn k_lower(precision: u32) -> Rational {
    compute_k(precision, Rounding::TowardZero).value
}

/// Rounds `x >= 0` to the nearest multiple of `10^-digits` (halves go up).
pub fn round_to_decimal(x: &Rational, digits: u32) -> Rational {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled =
        x * Rational::from_integer(scale.clone()) + Rational::new(BigInt::one(), BigInt::from(2));
    let numer = scaled.floor().to_integer();
    if numer.is_zero() {
        return Rational::zero();
    }
    Rational::new(numer, scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use num_traits::Signed;

    /// Cardano's closed form, evaluated in floating point.
    fn cardano() -> f64 {
        let s = 330f64.sqrt();
        (1.0 + (109.0 - 6.0 * s).cbrt() + (109.0 + 6.0 * s).cbrt()) / 6.0
    }

    fn to_f64(x: &Rational) -> f64 {
        x.numer().to_string().parse::<f64>().unwrap()
            / x.denom().to_string().parse::<f64>().unwrap()
    }

    #[test]
    fn four_digits_rounded_up() {
        let k = compute_k(4, Rounding::AwayFromZero);
        assert!(k.value >= ratio(11974, 10000) && k.value <= ratio(11975, 10000));
        assert!(!k_polynomial(&k.value).is_negative());
        assert_eq!(k.value, ratio(11975, 10000));
    }

    #[test]
    fn one_digit_rounded_down() {
        let k = compute_k(1, Rounding::TowardZero);
        assert!(k.value >= ratio(11, 10) && k.value < ratio(12, 10));
        assert!(!k_polynomial(&k.value).is_positive());
    }

    #[test]
    fn twelve_digit_residual() {
        let v = k_upper(12);
        let residual = k_polynomial(&v);
        assert!(!residual.is_negative());
        assert!(residual < ratio(1, 100_000_000_000));
        assert_eq!(
            &v - k_lower(12),
            Rational::new(BigInt::one(), BigInt::from(10u64.pow(12)))
        );
    }

    #[test]
    fn agrees_with_closed_form() {
        let k = cardano();
        assert!((k - 1.1974).abs() < 1e-4);
        for p in 1..=12 {
            let lo = to_f64(&k_lower(p));
            let hi = to_f64(&k_upper(p));
            assert!(lo <= k + 1e-14 && k <= hi + 1e-14, "precision {p}");
        }
    }

    #[test]
    fn rounding_to_decimal() {
        assert_eq!(round_to_decimal(&ratio(1, 3), 2), ratio(33, 100));
        assert_eq!(round_to_decimal(&ratio(2, 3), 2), ratio(67, 100));
        assert_eq!(round_to_decimal(&ratio(1, 1000), 2), Rational::zero());
    }
}
