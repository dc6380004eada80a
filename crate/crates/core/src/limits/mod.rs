//! Numeric checks that the q-product formulas degenerate to the classical
//! ones as `q → 1`.
//!
//! Watson-type target: `(a, b, z) ↦ (q^α, q^β, (1−q)z/2)` in the
//! `_2φ_1[a,−a;a²]` product must approach `_1F_1[α;2α;z]·_1F_1[β;2β;−z]`.
//!
//! Whipple-type target: `(a, b, z) ↦ (q^α, q^β, 2z/(1−q))` in the
//! `_2φ_1[a,q/a;−q]` product must approach `_2F_0[α,1−α;z]·_2F_0[β,1−β;−z]`.

mod real;

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyper::{f_series, FSpec};
use crate::qcore::rational::{int, rat, to_exact_string};
use crate::qcore::Rational;
use crate::series::TruncatedSeries;

pub use real::{bits_for_digits, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LimitTarget {
    #[serde(rename = "watson_2_11")]
    Watson211,
    #[serde(rename = "whipple_2_08")]
    Whipple208,
}

impl LimitTarget {
    pub const ALL: [LimitTarget; 2] = [LimitTarget::Watson211, LimitTarget::Whipple208];

    pub fn name(self) -> &'static str {
        match self {
            LimitTarget::Watson211 => "watson_2_11",
            LimitTarget::Whipple208 => "whipple_2_08",
        }
    }
}

impl fmt::Display for LimitTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub const MIN_PRECISION_DIGITS: u32 = 50;

#[derive(Debug, Clone, PartialEq)]
pub struct LimitSpec {
    pub target: LimitTarget,
    pub alpha: Rational,
    pub beta: Rational,
    pub max_coeff: usize,
    pub q_sequence: Vec<Rational>,
    pub tolerance: f64,
    pub precision_digits: u32,
}

/// `q = 1 − 2^(−k)` for `k = 4..=12`.
pub fn default_q_sequence() -> Vec<Rational> {
    (4..=12).map(|k| int(1) - rat(1, 1 << k)).collect()
}

impl LimitSpec {
    pub fn new(target: LimitTarget, alpha: Rational, beta: Rational) -> Self {
        LimitSpec {
            target,
            alpha,
            beta,
            max_coeff: 6,
            q_sequence: default_q_sequence(),
            tolerance: 1e-4,
            precision_digits: MIN_PRECISION_DIGITS,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.q_sequence.is_empty() {
            return Err(Error::Invalid("empty q sequence".into()));
        }
        if self
            .q_sequence
            .iter()
            .any(|q| !q.is_positive() || *q >= Rational::one())
        {
            return Err(Error::Invalid("q values must lie in (0, 1)".into()));
        }
        if self.q_sequence.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(
                "q sequence must be strictly increasing".into(),
            ));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::Invalid("tolerance must be positive".into()));
        }
        if self.precision_digits < MIN_PRECISION_DIGITS {
            return Err(Error::Invalid(format!(
                "precision must be at least {MIN_PRECISION_DIGITS} digits"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitReport {
    pub target: LimitTarget,
    #[serde(serialize_with = "ser_rational")]
    pub alpha: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub beta: Rational,
    #[serde(serialize_with = "ser_rationals")]
    pub q_values: Vec<Rational>,
    /// `errors[i][n] = |c_n(q_i) − c_n^classical|`, with anything below the
    /// certified accuracy recorded as `0`.
    pub errors: Vec<Vec<f64>>,
    pub final_error: f64,
    pub monotone_tail: bool,
    pub tolerance: f64,
    pub passed: bool,
}

fn ser_rational<S: serde::Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_exact_string(x))
}

fn ser_rationals<S: serde::Serializer>(
    xs: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(to_exact_string))
}

/// Coefficients of `Σ_k Π(num;q)_k / Π(den;q)_k / (q;q)_k · scalar^k z^k`.
fn phi_coefficients(num: &[Real], den: &[Real], q: &Real, scalar: &Real, max: usize) -> Vec<Real> {
    let bits = q.bits();
    let one = Real::one(bits);
    let mut num_run: Vec<Real> = num.to_vec();
    let mut den_run: Vec<Real> = den.to_vec();
    let mut q_run = q.clone();
    let mut term = one.clone();
    let mut out = vec![term.clone()];
    for _ in 0..max {
        let mut top = scalar.clone();
        for x in num_run.iter_mut() {
            top = &top * &(&one - x);
            *x = &*x * q;
        }
        let mut bottom = &one - &q_run;
        for x in den_run.iter_mut() {
            bottom = &bottom * &(&one - x);
            *x = &*x * q;
        }
        q_run = &q_run * q;
        term = &(&term * &top) / &bottom;
        out.push(term.clone());
    }
    out
}

fn convolve(a: &[Real], b: &[Real]) -> Vec<Real> {
    let bits = a[0].bits();
    (0..a.len().min(b.len()))
        .map(|n| (0..=n).fold(Real::zero(bits), |acc, i| &acc + &(&a[i] * &b[n - i])))
        .collect()
}

/// q-side coefficients `c_0..c_max` at one `q`, computed with `bits` of precision.
pub fn q_side_coefficients(
    target: LimitTarget,
    alpha: &Rational,
    beta: &Rational,
    q: &Rational,
    max_coeff: usize,
    bits: u32,
) -> Result<Vec<Real>> {
    let qr = Real::from_rational(q, bits);
    let one = Real::one(bits);
    let factor = |exponent: &Rational, sign: i64| -> Result<Vec<Real>> {
        let x = Real::pow_rational(q, exponent, bits)?;
        let sign = Real::from_rational(&int(sign), bits);
        match target {
            LimitTarget::Watson211 => {
                // _2φ_1[x, −x; x²; q, ±(1−q)z/2]
                let scalar = &sign * &(&(&one - &qr) / &Real::from_rational(&int(2), bits));
                let x2 = Real::pow_rational(q, &(exponent * int(2)), bits)?;
                Ok(phi_coefficients(
                    &[x.clone(), -&x],
                    &[x2],
                    &qr,
                    &scalar,
                    max_coeff,
                ))
            }
            LimitTarget::Whipple208 => {
                // _2φ_1[x, q/x; −q; q, ±2z/(1−q)]
                let scalar = &sign * &(&Real::from_rational(&int(2), bits) / &(&one - &qr));
                let q_over_x = Real::pow_rational(q, &(int(1) - exponent), bits)?;
                Ok(phi_coefficients(
                    &[x, q_over_x],
                    &[-&qr],
                    &qr,
                    &scalar,
                    max_coeff,
                ))
            }
        }
    };
    Ok(convolve(&factor(alpha, 1)?, &factor(beta, -1)?))
}

/// Exact coefficients of the classical product.
pub fn classical_coefficients(
    target: LimitTarget,
    alpha: &Rational,
    beta: &Rational,
    max_coeff: usize,
) -> Result<TruncatedSeries> {
    let spec = |x: &Rational| match target {
        LimitTarget::Watson211 => FSpec::new(vec![x.clone()], vec![x * int(2)]),
        LimitTarget::Whipple208 => FSpec::new(vec![x.clone(), int(1) - x], vec![]),
    };
    let left = f_series(&spec(alpha), max_coeff)?;
    let right = f_series(&spec(beta).argument(int(-1), 1), max_coeff)?;
    Ok(left.mul(&right))
}

pub fn limit_check(spec: &LimitSpec) -> Result<LimitReport> {
    spec.validate()?;
    let bits = bits_for_digits(spec.precision_digits);
    let classical = classical_coefficients(spec.target, &spec.alpha, &spec.beta, spec.max_coeff)?;
    let classical: Vec<Real> = classical
        .coeffs()
        .iter()
        .map(|c| Real::from_rational(c, bits))
        .collect();
    let certify = (spec.tolerance * 1e-3).min(1e-20);

    let mut errors = Vec::with_capacity(spec.q_sequence.len());
    for q in &spec.q_sequence {
        let coeffs = q_side_coefficients(
            spec.target,
            &spec.alpha,
            &spec.beta,
            q,
            spec.max_coeff,
            bits,
        )?;
        let fine = q_side_coefficients(
            spec.target,
            &spec.alpha,
            &spec.beta,
            q,
            spec.max_coeff,
            2 * bits,
        )?;
        for (n, (c, f)) in coeffs.iter().zip(&fine).enumerate() {
            let drift = (&c.with_bits(2 * bits) - f).abs().to_f64();
            if drift > certify {
                return Err(Error::PrecisionExhausted(format!(
                    "coefficient {n} at q = {q} moves by {drift:e} when precision doubles"
                )));
            }
        }
        // differences below the certified accuracy are rounding noise
        errors.push(
            coeffs
                .iter()
                .zip(&classical)
                .map(|(c, k)| (c - k).abs().to_f64())
                .map(|e| if e <= certify { 0.0 } else { e })
                .collect::<Vec<f64>>(),
        );
    }

    let tail = &errors[errors.len().saturating_sub(3)..];
    let monotone_tail = (0..=spec.max_coeff).all(|n| tail.windows(2).all(|w| w[1][n] <= w[0][n]));
    let final_error = errors
        .last()
        .map(|row| row.iter().cloned().fold(0.0, f64::max))
        .unwrap_or(0.0);
    Ok(LimitReport {
        target: spec.target,
        alpha: spec.alpha.clone(),
        beta: spec.beta.clone(),
        q_values: spec.q_sequence.clone(),
        errors,
        final_error,
        monotone_tail,
        tolerance: spec.tolerance,
        passed: monotone_tail && final_error <= spec.tolerance,
    })
}

impl LimitReport {
    /// Coefficient indices whose error is exactly zero at every q.
    pub fn exact_indices(&self) -> Vec<usize> {
        let width = self.errors.first().map_or(0, Vec::len);
        (0..width)
            .filter(|&n| self.errors.iter().all(|row| row[n].is_zero()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_coefficient_is_exact() {
        for target in LimitTarget::ALL {
            let report = limit_check(&LimitSpec {
                max_coeff: 2,
                ..LimitSpec::new(target, rat(1, 3), rat(1, 5))
            })
            .unwrap();
            assert!(report.errors.iter().all(|row| row[0] == 0.0));
        }
    }

    #[test]
    fn watson_equal_parameters_odd_coefficients_vanish() {
        let bits = bits_for_digits(50);
        for q in default_q_sequence() {
            let c =
                q_side_coefficients(LimitTarget::Watson211, &rat(2, 3), &rat(2, 3), &q, 5, bits)
                    .unwrap();
            assert!(c[1].is_zero() && c[3].is_zero() && c[5].is_zero());
        }
        let k = classical_coefficients(LimitTarget::Watson211, &rat(2, 3), &rat(2, 3), 5).unwrap();
        assert!(k.odd_part().is_zero());
    }

    #[test]
    fn rejects_bad_specs() {
        let base = LimitSpec::new(LimitTarget::Watson211, int(1), rat(1, 2));
        let bad = [
            LimitSpec {
                q_sequence: vec![],
                ..base.clone()
            },
            LimitSpec {
                q_sequence: vec![rat(1, 2), rat(1, 3)],
                ..base.clone()
            },
            LimitSpec {
                q_sequence: vec![rat(1, 2), int(1)],
                ..base.clone()
            },
            LimitSpec {
                tolerance: 0.0,
                ..base.clone()
            },
            LimitSpec {
                precision_digits: 20,
                ..base.clone()
            },
        ];
        for spec in bad {
            assert!(
                matches!(limit_check(&spec), Err(Error::Invalid(_))),
                "{spec:?}"
            );
        }
    }

    #[test]
    fn classical_pole_propagates() {
        // _1F_1[−1/2; −1] hits a zero rising factorial
        let err =
            classical_coefficients(LimitTarget::Watson211, &rat(-1, 2), &int(1), 4).unwrap_err();
        assert!(err.is_pole());
    }
}
