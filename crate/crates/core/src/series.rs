//! Truncated power series in one variable `z` with exact coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::qcore::Rational;

/// `c_0 + c_1 z + … + c_N z^N + O(z^{N+1})`.
///
/// Binary operations truncate to the smaller order, and `==` compares
/// coefficients up to the smaller order.
#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

/// Integer numerators over the least common denominator.
fn common_denominator(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let numers = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    (numers, lcm)
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Panics on an empty coefficient list.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `c_n`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<Rational> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        // Convolve integer numerators over a common denominator so that each
        // output coefficient is normalised once instead of once per product.
        let (a, da) = common_denominator(&self.coeffs[..=order]);
        let (b, db) = common_denominator(&other.coeffs[..=order]);
        let denom = da * db;
        let coeffs = (0..=order)
            .map(|k| {
                let mut sum = BigInt::zero();
                for i in 0..=k {
                    if !a[i].is_zero() && !b[k - i].is_zero() {
                        sum += &a[i] * &b[k - i];
                    }
                }
                Rational::new(sum, denom.clone())
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Substitutes `z ↦ k·z`.
    pub fn scale_arg(&self, k: &Rational) -> Self {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &power);
            power *= k;
        }
        TruncatedSeries { coeffs }
    }

    pub fn even_part(&self) -> Self {
        self.parity_part(0)
    }

    pub fn odd_part(&self) -> Self {
        self.parity_part(1)
    }

    fn parity_part(&self, parity: usize) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if i % 2 == parity {
                        c.clone()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        }
    }

    /// Substitutes `z ↦ z²`. The result has order `2N + 1`.
    pub fn embed_in_square(&self) -> Self {
        let mut coeffs = vec![Rational::zero(); 2 * self.order() + 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len()];
        for (i, c) in self
            .coeffs
            .iter()
            .enumerate()
            .take(self.coeffs.len().saturating_sub(k))
        {
            coeffs[i + k] = c.clone();
        }
        TruncatedSeries { coeffs }
    }

    /// First index (up to the smaller order) where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, Rational, Rational)> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| (i, a.clone(), b.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if wrote {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}
