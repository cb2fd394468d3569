//! Exact rational helpers shared by every module.
//!
//! All tallies, game values and Shapley values are carried as
//! [`Rational`] (arbitrary precision), so ties and constant-sum identities
//! are decided exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

/// Rational from an integer.
pub fn int<T: Into<BigInt>>(value: T) -> Rational {
    Rational::from_integer(value.into())
}

/// Rational `numer / denom`. Panics if `denom == 0`.
pub fn frac<T: Into<BigInt>, U: Into<BigInt>>(numer: T, denom: U) -> Rational {
    Rational::new(numer.into(), denom.into())
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"0.5"` / `"-23.5"`.
pub fn parse(text: &str) -> Result<Rational, ParseRationalError> {
    let s = text.trim();
    let err = || ParseRationalError(text.to_string());
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, digits)) = s.split_once('.') {
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = whole.starts_with('-');
        let whole_abs = whole.trim_start_matches(['-', '+']);
        let whole_abs: BigInt = if whole_abs.is_empty() {
            BigInt::zero()
        } else {
            whole_abs.parse().map_err(|_| err())?
        };
        let scale = BigInt::from(10u32).pow(digits.len() as u32);
        let frac_part: BigInt = digits.parse().map_err(|_| err())?;
        let magnitude = Rational::new(whole_abs * &scale + frac_part, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let p: BigInt = s.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(p))
}

/// Machine rendering: `"p/q"`, or `"p"` for integers.
pub fn to_exact_string(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Rounds to `places` decimals, half away from zero, exactly.
pub fn round_decimal(value: &Rational, places: u32) -> Rational {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = value.abs() * Rational::from_integer(scale.clone());
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let twice_r: BigInt = r * 2;
    let rounded = if &twice_r >= scaled.denom() { q + 1 } else { q };
    let magnitude = Rational::new(rounded, scale);
    if value.is_negative() {
        -magnitude
    } else {
        magnitude
    }
}

/// Display rendering in the style of published tables: rounded to `places`
/// decimals with trailing zeros trimmed (`7.9`, `0.45`, `4`).
pub fn to_decimal_string(value: &Rational, places: u32) -> String {
    let rounded = round_decimal(value, places);
    let scale = BigInt::from(10u32).pow(places);
    let scaled = (rounded.abs() * Rational::from_integer(scale.clone())).to_integer();
    let (whole, fractional) = scaled.div_rem(&scale);
    let sign = if rounded.is_negative() { "-" } else { "" };
    if places == 0 || fractional.is_zero() {
        return format!("{sign}{whole}");
    }
    let digits = format!("{:0>width$}", fractional.to_string(), width = places as usize);
    format!("{sign}{whole}.{}", digits.trim_end_matches('0'))
}

/// Nearest `f64`, used only for display and JSON approximations.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}
