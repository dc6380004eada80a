//! Coefficient builders for basic (`_rφ_s`) and classical (`_pF_q`)
//! hypergeometric series.
//!
//! Basic series follow the usual convention
//!
//! ```text
//! _rφ_s[a_1..a_r; b_1..b_s; p, x] = Σ_k (a_1..a_r; p)_k / (p, b_1..b_s; p)_k
//!                                      · [(−1)^k p^(k choose 2)]^(1+s−r) · x^k
//! ```
//!
//! with `p = q^base_step`. Coefficients are produced by the term-ratio
//! recurrence. Parameter pairs `x, −x` on the same side are contracted to a
//! single factor `(x²; p²)_k` before evaluation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qcore::rational::pow_i;
use crate::qcore::{qpoch, Monomial, ParamPoint, Rational, Symbol};
use crate::series::TruncatedSeries;

/// A basic hypergeometric series `_rφ_s[num; den; q^base_step, scalar·z^power]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiSpec {
    pub numerator: Vec<Monomial>,
    pub denominator: Vec<Monomial>,
    pub base_step: u32,
    pub argument_scalar: Monomial,
    pub argument_power: u32,
}

impl PhiSpec {
    /// Series in base `q^base_step` with argument `z`.
    pub fn new(numerator: Vec<Monomial>, denominator: Vec<Monomial>, base_step: u32) -> Self {
        PhiSpec {
            numerator,
            denominator,
            base_step,
            argument_scalar: Monomial::one(),
            argument_power: 1,
        }
    }

    /// Replaces the argument by `scalar · z^power`.
    pub fn argument(mut self, scalar: Monomial, power: u32) -> Self {
        self.argument_scalar = scalar;
        self.argument_power = power;
        self
    }
}

/// `(x; ratio)_k` in running form.
struct Factor {
    x: Rational,
    ratio: Rational,
    /// `x · ratio^k` for the current `k`.
    current: Rational,
}

impl Factor {
    fn new(x: Rational, ratio: Rational) -> Self {
        Factor {
            current: x.clone(),
            x,
            ratio,
        }
    }

    /// `1 − x·ratio^k`, then advances `k`.
    fn next(&mut self) -> Rational {
        let value = Rational::one() - &self.current;
        self.current *= &self.ratio;
        value
    }
}

fn contracted(params: &[Monomial], p: &ParamPoint, base: &Rational) -> Result<Vec<Factor>> {
    let mut used = vec![false; params.len()];
    let mut out = Vec::with_capacity(params.len());
    for i in 0..params.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let partner = (i + 1..params.len()).find(|&j| !used[j] && params[j] == -&params[i]);
        match partner {
            Some(j) => {
                used[j] = true;
                let square = &params[i] * &params[i];
                out.push(Factor::new(square.eval(p)?, base * base));
            }
            None => out.push(Factor::new(params[i].eval(p)?, base.clone())),
        }
    }
    Ok(out)
}

/// Terms `t_0..t_count` of the series at `x = argument_scalar` (without `z`).
/// Any denominator factor vanishing in that range is a pole, even after the
/// numerator has already terminated the series.
fn phi_terms(spec: &PhiSpec, p: &ParamPoint, count: usize) -> Result<Vec<Rational>> {
    if spec.base_step == 0 {
        return Err(Error::Invalid("base step must be positive".into()));
    }
    let q = p.q()?;
    let base = pow_i(q, spec.base_step as i64)?;
    let scalar = spec.argument_scalar.eval(p)?;
    let mut numer = contracted(&spec.numerator, p, &base)?;
    let mut denom = contracted(&spec.denominator, p, &base)?;
    let extra_exponent = 1 + spec.denominator.len() as i64 - spec.numerator.len() as i64;

    let mut terms = Vec::with_capacity(count + 1);
    let mut term = Rational::one();
    let mut base_power = base.clone(); // base^(k+1)
    let mut base_k = Rational::one(); // base^k
    terms.push(term.clone());
    for k in 0..count {
        let mut num = scalar.clone();
        for f in numer.iter_mut() {
            num *= f.next();
        }
        let mut den = Rational::one() - &base_power;
        for f in denom.iter_mut() {
            let v = f.next();
            if v.is_zero() {
                return Err(Error::Pole(format!(
                    "denominator parameter {} vanishes at index {}",
                    f.x,
                    k + 1
                )));
            }
            den *= v;
        }
        if extra_exponent != 0 {
            num *= pow_i(&-&base_k, extra_exponent)?;
        }
        term = term * num / den;
        terms.push(term.clone());
        base_power *= &base;
        base_k *= &base;
    }
    Ok(terms)
}

fn place(terms: Vec<Rational>, power: u32, order: usize) -> Result<TruncatedSeries> {
    let series = TruncatedSeries::from_coeffs(terms);
    match power {
        1 => Ok(series.truncate(order)),
        2 => Ok(series.embed_in_square().truncate(order)),
        _ => Err(Error::Invalid(format!(
            "argument power {power} is not 1 or 2"
        ))),
    }
}

/// Power series in `z` up to `z^order`.
pub fn phi_series(spec: &PhiSpec, p: &ParamPoint, order: usize) -> Result<TruncatedSeries> {
    let count = order / spec.argument_power.max(1) as usize;
    place(phi_terms(spec, p, count)?, spec.argument_power, order)
}

/// Exact value of a terminating series at `z = 1`, summing `k = 0..=termination_index`.
///
/// One numerator parameter must equal `(q^base_step)^(−termination_index)`.
pub fn phi_terminating_value(
    spec: &PhiSpec,
    p: &ParamPoint,
    termination_index: usize,
) -> Result<Rational> {
    let q = p.q()?;
    let target = pow_i(q, -(spec.base_step as i64) * termination_index as i64)?;
    let mut terminates = false;
    for m in &spec.numerator {
        if m.eval(p)? == target {
            terminates = true;
            break;
        }
    }
    if !terminates {
        return Err(Error::Invalid(format!(
            "no numerator parameter equals q^-{} (base step {})",
            termination_index, spec.base_step
        )));
    }
    Ok(phi_terms(spec, p, termination_index)?.into_iter().sum())
}

/// A classical series `_pF_q[num; den; scalar·z^power]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FSpec {
    pub numerator: Vec<Rational>,
    pub denominator: Vec<Rational>,
    pub argument_scalar: Rational,
    pub argument_power: u32,
}

impl FSpec {
    pub fn new(numerator: Vec<Rational>, denominator: Vec<Rational>) -> Self {
        FSpec {
            numerator,
            denominator,
            argument_scalar: Rational::one(),
            argument_power: 1,
        }
    }

    pub fn argument(mut self, scalar: Rational, power: u32) -> Self {
        self.argument_scalar = scalar;
        self.argument_power = power;
        self
    }
}

/// Formal power series of a `_pF_q`, via rising factorials.
pub fn f_series(spec: &FSpec, order: usize) -> Result<TruncatedSeries> {
    let count = order / spec.argument_power.max(1) as usize;
    let mut terms = Vec::with_capacity(count + 1);
    let mut term = Rational::one();
    terms.push(term.clone());
    for k in 0..count {
        let kk = Rational::from_integer(BigInt::from(k));
        let mut num = spec.argument_scalar.clone();
        for a in &spec.numerator {
            num *= a + &kk;
        }
        let mut den = &kk + Rational::one();
        for b in &spec.denominator {
            let v = b + &kk;
            if v.is_zero() {
                return Err(Error::Pole(format!(
                    "denominator parameter {b} gives a zero rising factorial at index {}",
                    k + 1
                )));
            }
            den *= v;
        }
        term = term * num / den;
        terms.push(term.clone());
    }
    place(terms, spec.argument_power, order)
}

/// The single sum in the middle of the Whipple-type product formula:
/// `Σ_j (q^{2−j}/ab, a q^{1−j}/b; q²)_j / (q²;q²)_j · q^{j(j−1)/2} (b z)^j`.
pub fn thm4_middle_series(p: &ParamPoint, order: usize) -> Result<TruncatedSeries> {
    let q = p.q()?;
    let a = p.get(Symbol::A)?;
    let b = p.get(Symbol::B)?;
    let q2 = q * q;
    let ab = a * b;
    let a_over_b = a / b;
    let mut coeffs = Vec::with_capacity(order + 1);
    for j in 0..=order {
        let j = j as i64;
        let x1 = pow_i(q, 2 - j)? / &ab;
        let x2 = &a_over_b * pow_i(q, 1 - j)?;
        let numer = qpoch(&x1, &q2, j as usize) * qpoch(&x2, &q2, j as usize);
        let denom = qpoch(&q2, &q2, j as usize);
        let c = numer / denom * pow_i(q, j * (j - 1) / 2)? * pow_i(b, j)?;
        coeffs.push(c);
    }
    Ok(TruncatedSeries::from_coeffs(coeffs))
}
