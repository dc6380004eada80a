//! Exact rational scalars.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always normalised (lowest terms, positive denominator).
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `x^e` for any integer exponent. `0^e` with `e < 0` is a pole.
pub fn pow_i(x: &Rational, e: i64) -> Result<Rational> {
    if e < 0 && x.is_zero() {
        return Err(Error::Pole("zero raised to a negative power".into()));
    }
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut k = e.unsigned_abs();
    let mut acc = Rational::one();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    Ok(acc)
}

/// Exact non-negative square root, if `x` is the square of a rational.
pub fn exact_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Lossless `num/den` text form; integers keep an explicit `/1`.
pub fn to_exact_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `7`, `-3/4` or `3/-4`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Invalid(format!("cannot parse `{text}` as a rational"));
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}
