//! Finite q-shifted factorials and the reducer for quotients of infinite ones.
//!
//! The reducer works on symbolic arguments. Two infinite factors with the same
//! step `k` and arguments `x` and `x·q^(k·m)`, `m ≥ 0`, telescope:
//! `(x; q^k)_∞ / (x q^(k m); q^k)_∞ = (x; q^k)_m`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::point::ParamPoint;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `(x; base)_n = Π_{k<n} (1 − x·base^k)`.
pub fn qpoch(x: &Rational, base: &Rational, n: usize) -> Rational {
    // factor k is (d·bd^k − m·bn^k) / (d·bd^k) for x = m/d, base = bn/bd;
    // multiply numerators as integers and reduce once at the end
    let (bn, bd) = (base.numer(), base.denom());
    let mut top = x.numer().clone();
    let mut bottom = x.denom().clone();
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for _ in 0..n {
        let factor = &bottom - &top;
        if factor.is_zero() {
            return Rational::zero();
        }
        numer *= factor;
        denom *= &bottom;
        top *= bn;
        bottom *= bd;
    }
    Rational::new(numer, denom)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PochLength {
    Finite(usize),
    Infinite,
}

/// `(argument; q^step)_length`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PochFactor {
    pub argument: Monomial,
    pub step: u32,
    pub length: PochLength,
}

impl PochFactor {
    pub fn infinite(argument: Monomial, step: u32) -> Self {
        PochFactor {
            argument,
            step,
            length: PochLength::Infinite,
        }
    }

    pub fn finite(argument: Monomial, step: u32, count: usize) -> Self {
        PochFactor {
            argument,
            step,
            length: PochLength::Finite(count),
        }
    }
}

impl fmt::Display for PochFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = if self.step == 1 {
            "q".to_string()
        } else {
            format!("q^{}", self.step)
        };
        match self.length {
            PochLength::Finite(n) => write!(f, "({};{})_{}", self.argument, base, n),
            PochLength::Infinite => write!(f, "({};{})_inf", self.argument, base),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Placement {
    Numerator,
    Denominator,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteFactor {
    pub argument: Monomial,
    pub step: u32,
    pub length: usize,
    pub placement: Placement,
}

/// A product of finite q-shifted factorials, or a certified zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReducedProduct {
    pub factors: Vec<FiniteFactor>,
    pub zero: bool,
}

impl ReducedProduct {
    pub fn zero() -> Self {
        ReducedProduct {
            factors: Vec::new(),
            zero: true,
        }
    }
}

impl fmt::Display for ReducedProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            return f.write_str("0");
        }
        let render = |placement| {
            let parts: Vec<String> = self
                .factors
                .iter()
                .filter(|x| x.placement == placement)
                .map(|x| PochFactor::finite(x.argument.clone(), x.step, x.length).to_string())
                .collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("")
            }
        };
        write!(
            f,
            "{} / {}",
            render(Placement::Numerator),
            render(Placement::Denominator)
        )
    }
}

/// `+q^e` with `e ≤ 0` and `step | e`: the product contains `1 − q⁰`.
fn vanishes(arg: &Monomial, step: u32) -> bool {
    if !arg.is_pure_q_power() {
        return false;
    }
    let (_, e) = arg.split_q();
    e <= 0 && e % step as i64 == 0
}

fn split_steps(factors: &[PochFactor], to_step_two: bool) -> Vec<(Monomial, u32)> {
    let mut out = Vec::with_capacity(factors.len() * 2);
    for f in factors {
        if to_step_two && f.step == 1 {
            // (x;q)_∞ = (x;q²)_∞ (xq;q²)_∞
            out.push((f.argument.clone(), 2));
            out.push((&f.argument * &Monomial::q_pow(1), 2));
        } else {
            out.push((f.argument.clone(), f.step));
        }
    }
    out
}

/// Reduces `Π numer / Π denom` of infinite q-shifted factorials to finite ones.
pub fn reduce_poch_quotient(numer: &[PochFactor], denom: &[PochFactor]) -> Result<ReducedProduct> {
    for f in numer.iter().chain(denom) {
        if f.length != PochLength::Infinite {
            return Err(Error::Invalid(format!("{f} is not an infinite product")));
        }
        if f.step != 1 && f.step != 2 {
            return Err(Error::Invalid(format!(
                "{f}: only bases q and q^2 are supported"
            )));
        }
    }
    let steps: Vec<u32> = numer.iter().chain(denom).map(|f| f.step).collect();
    let mixed = steps.contains(&1) && steps.contains(&2);
    let step = if steps.contains(&2) { 2 } else { 1 };
    let numer = split_steps(numer, mixed);
    let denom = split_steps(denom, mixed);

    if let Some((arg, s)) = denom.iter().find(|(a, s)| vanishes(a, *s)) {
        return Err(Error::Pole(format!(
            "denominator ({arg};q^{s})_inf contains a zero factor"
        )));
    }
    if numer.iter().any(|(a, s)| vanishes(a, *s)) {
        return Ok(ReducedProduct::zero());
    }

    // (q-free part, residue of the q-exponent) -> (numerator exponents, denominator exponents)
    let mut groups: BTreeMap<(Monomial, i64), (Vec<i64>, Vec<i64>)> = BTreeMap::new();
    let step_i = step as i64;
    for (side, list) in [(0, &numer), (1, &denom)] {
        for (arg, _) in list.iter() {
            let (rest, e) = arg.split_q();
            let slot = groups.entry((rest, e.rem_euclid(step_i))).or_default();
            if side == 0 {
                slot.0.push(e);
            } else {
                slot.1.push(e);
            }
        }
    }

    let mut factors = Vec::new();
    for ((rest, _), (mut ns, mut ds)) in groups {
        if ns.len() != ds.len() {
            let show = |v: &[i64]| {
                v.iter()
                    .map(|e| (&rest * &Monomial::q_pow(*e)).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            return Err(Error::Irreducible(format!(
                "unmatched factors in numerator [{}] / denominator [{}] (step {step})",
                show(&ns),
                show(&ds)
            )));
        }
        ns.sort_unstable();
        ds.sort_unstable();
        for (n, d) in ns.into_iter().zip(ds) {
            let (start, placement) = if d >= n {
                (n, Placement::Numerator)
            } else {
                (d, Placement::Denominator)
            };
            let length = ((d - n).abs() / step_i) as usize;
            if length > 0 {
                factors.push(FiniteFactor {
                    argument: &rest * &Monomial::q_pow(start),
                    step,
                    length,
                    placement,
                });
            }
        }
    }
    factors.sort();
    Ok(ReducedProduct {
        factors,
        zero: false,
    })
}

pub fn eval_reduced(rp: &ReducedProduct, p: &ParamPoint) -> Result<Rational> {
    if rp.zero {
        return Ok(Rational::zero());
    }
    let q = p.q()?;
    let mut numer = Rational::one();
    let mut denom = Rational::one();
    for f in &rp.factors {
        let base = super::rational::pow_i(q, f.step as i64)?;
        let value = qpoch(&f.argument.eval(p)?, &base, f.length);
        match f.placement {
            Placement::Numerator => numer *= value,
            Placement::Denominator => {
                if value.is_zero() {
                    return Err(Error::Pole(format!(
                        "({};q^{})_{} vanishes at {p}",
                        f.argument, f.step, f.length
                    )));
                }
                denom *= value;
            }
        }
    }
    Ok(numer / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::monomial::{mono, Symbol::*};
    use crate::qcore::rational::{int, rat};

    fn inf2(m: Monomial) -> PochFactor {
        PochFactor::infinite(m, 2)
    }

    #[test]
    fn qpoch_examples() {
        assert_eq!(qpoch(&rat(1, 2), &rat(1, 3), 0), int(1));
        assert_eq!(qpoch(&rat(1, 2), &rat(1, 3), 2), rat(5, 12));
        assert_eq!(qpoch(&int(3), &rat(1, 3), 2), int(0));
    }

    #[test]
    fn zero_certificate() {
        let rp = reduce_poch_quotient(&[inf2(Monomial::q_pow(-2))], &[]).unwrap();
        assert_eq!(rp, ReducedProduct::zero());
        // (q^{-1};q²)_∞ never hits 1 − q⁰
        let err = reduce_poch_quotient(&[inf2(Monomial::q_pow(-1))], &[]).unwrap_err();
        assert!(matches!(err, Error::Irreducible(_)));
    }

    #[test]
    fn denominator_zero_is_a_pole() {
        let err = reduce_poch_quotient(&[], &[inf2(Monomial::q_pow(0))]).unwrap_err();
        assert!(err.is_pole());
    }

    #[test]
    fn non_power_quotient_is_irreducible() {
        let err = reduce_poch_quotient(&[inf2(A.into())], &[inf2(C.into())]).unwrap_err();
        assert!(matches!(err, Error::Irreducible(_)));
    }

    #[test]
    fn sign_separates_groups() {
        let err = reduce_poch_quotient(&[inf2(A.into())], &[inf2(-Monomial::sym(A))]).unwrap_err();
        assert!(matches!(err, Error::Irreducible(_)));
    }

    #[test]
    fn telescoping_both_directions() {
        let rp = reduce_poch_quotient(
            &[inf2(mono(&[(A, 1), (Q, 1)])), inf2(mono(&[(C, 1), (Q, 5)]))],
            &[inf2(mono(&[(A, 1), (Q, 5)])), inf2(mono(&[(C, 1), (Q, 1)]))],
        )
        .unwrap();
        assert_eq!(
            rp.factors,
            vec![
                FiniteFactor {
                    argument: mono(&[(A, 1), (Q, 1)]),
                    step: 2,
                    length: 2,
                    placement: Placement::Numerator
                },
                FiniteFactor {
                    argument: mono(&[(C, 1), (Q, 1)]),
                    step: 2,
                    length: 2,
                    placement: Placement::Denominator
                },
            ]
        );
    }

    #[test]
    fn mixed_steps_split() {
        // (x;q)_∞ / (x;q²)_∞ = (xq;q²)_∞, which cannot cancel on its own
        let x: Monomial = E.into();
        let err = reduce_poch_quotient(&[PochFactor::infinite(x.clone(), 1)], &[inf2(x.clone())])
            .unwrap_err();
        assert!(matches!(err, Error::Irreducible(_)));
        // (x;q)_∞ / [(x;q²)_∞ (xq³;q²)_∞] = (xq;q²)_1
        let rp = reduce_poch_quotient(
            &[PochFactor::infinite(x.clone(), 1)],
            &[inf2(x.clone()), inf2(&x * &Monomial::q_pow(3))],
        )
        .unwrap();
        assert_eq!(rp.factors.len(), 1);
        assert_eq!(rp.factors[0].argument, &x * &Monomial::q_pow(1));
        assert_eq!(rp.factors[0].placement, Placement::Numerator);
    }

    #[test]
    fn finite_input_rejected() {
        let err = reduce_poch_quotient(&[PochFactor::finite(A.into(), 1, 3)], &[]).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn eval_trivial_products() {
        let p = ParamPoint::new(rat(1, 4)).unwrap();
        assert_eq!(eval_reduced(&ReducedProduct::zero(), &p).unwrap(), int(0));
        assert_eq!(
            eval_reduced(&ReducedProduct::default(), &p).unwrap(),
            int(1)
        );
    }

    #[test]
    fn eval_finite_denominator_pole() {
        let p = ParamPoint::new(rat(1, 4)).unwrap();
        let rp = ReducedProduct {
            factors: vec![FiniteFactor {
                argument: Monomial::q_pow(-2),
                step: 2,
                length: 2,
                placement: Placement::Denominator,
            }],
            zero: false,
        };
        assert!(eval_reduced(&rp, &p).unwrap_err().is_pole());
    }
}
