//! Binary fixed-point reals with a per-value precision.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::qcore::Rational;

/// `mantissa · 2^(−bits)`, rounded towards zero. Operands of a binary operation must share `bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Real {
    mantissa: BigInt,
    bits: u32,
}

/// Binary precision that holds `digits` decimal digits plus guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + 64
}

impl Real {
    pub fn zero(bits: u32) -> Self {
        Real {
            mantissa: BigInt::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Self {
        Real {
            mantissa: BigInt::one() << bits,
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Rounds towards zero.
    pub fn from_rational(x: &Rational, bits: u32) -> Self {
        Real {
            mantissa: (x.numer() << bits) / x.denom(),
            bits,
        }
    }

    /// `base^exponent` for `base > 0`, accurate to a couple of ulps.
    pub fn pow_rational(base: &Rational, exponent: &Rational, bits: u32) -> Result<Self> {
        if !base.is_positive() {
            return Err(Error::Invalid(format!("{base} must be positive")));
        }
        let base = if exponent.is_negative() {
            base.recip()
        } else {
            base.clone()
        };
        let p = exponent
            .numer()
            .abs()
            .to_u32()
            .ok_or_else(|| Error::Invalid(format!("exponent {exponent} too large")))?;
        let r = exponent
            .denom()
            .to_u32()
            .ok_or_else(|| Error::Invalid(format!("exponent {exponent} too large")))?;
        // floor((N/D)^(p/r) · 2^bits) = floor(root_r(N^p · 2^(bits·r) / D^p))
        let n = num_traits::pow(base.numer().clone(), p as usize);
        let d = num_traits::pow(base.denom().clone(), p as usize);
        let scaled = (n << (bits as usize * r as usize)) / d;
        Ok(Real {
            mantissa: scaled.nth_root(r),
            bits,
        })
    }

    pub fn abs(&self) -> Self {
        Real {
            mantissa: self.mantissa.abs(),
            bits: self.bits,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        Rational::new(self.mantissa.clone(), BigInt::one() << self.bits)
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Re-expresses the value at another precision.
    pub fn with_bits(&self, bits: u32) -> Self {
        let mantissa = match bits.cmp(&self.bits) {
            Ordering::Greater => &self.mantissa << (bits - self.bits),
            Ordering::Less => &self.mantissa >> (self.bits - bits),
            Ordering::Equal => self.mantissa.clone(),
        };
        Real { mantissa, bits }
    }

    /// Decimal expansion truncated to `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scaled =
            (&self.mantissa.abs() * num_traits::pow(BigInt::from(10), digits)) >> self.bits;
        let mut text = scaled.to_string();
        if text.len() <= digits {
            text = format!("{}{}", "0".repeat(digits + 1 - text.len()), text);
        }
        let (int, frac) = text.split_at(text.len() - digits);
        let sign = if self.mantissa.sign() == Sign::Minus {
            "-"
        } else {
            ""
        };
        format!("{sign}{int}.{frac}")
    }

    fn check(&self, other: &Real) {
        assert_eq!(self.bits, other.bits, "mixed precision arithmetic");
    }
}

impl Add for &Real {
    type Output = Real;

    fn add(self, rhs: &Real) -> Real {
        self.check(rhs);
        Real {
            mantissa: &self.mantissa + &rhs.mantissa,
            bits: self.bits,
        }
    }
}

impl Sub for &Real {
    type Output = Real;

    fn sub(self, rhs: &Real) -> Real {
        self.check(rhs);
        Real {
            mantissa: &self.mantissa - &rhs.mantissa,
            bits: self.bits,
        }
    }
}

impl Mul for &Real {
    type Output = Real;

    fn mul(self, rhs: &Real) -> Real {
        self.check(rhs);
        // truncate towards zero so that (−x)·y = −(x·y) exactly
        let product = &self.mantissa * &rhs.mantissa;
        let magnitude = product.abs() >> self.bits;
        let mantissa = if product.is_negative() {
            -magnitude
        } else {
            magnitude
        };
        Real {
            mantissa,
            bits: self.bits,
        }
    }
}

impl Div for &Real {
    type Output = Real;

    /// Panics on division by zero.
    fn div(self, rhs: &Real) -> Real {
        self.check(rhs);
        Real {
            mantissa: (&self.mantissa << self.bits) / &rhs.mantissa,
            bits: self.bits,
        }
    }
}

impl Neg for &Real {
    type Output = Real;

    fn neg(self) -> Real {
        Real {
            mantissa: -&self.mantissa,
            bits: self.bits,
        }
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.bits == other.bits).then(|| self.mantissa.cmp(&other.mantissa))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(f.precision().unwrap_or(30)))
    }
}
