//! Oracles shared by the integration tests. They evaluate everything from
//! first principles and never go through the term-ratio recurrences or the
//! reducer.

#![allow(dead_code)]

use num_traits::{One, Zero};
use qverify::limits::Real;
use qverify::qcore::rational::pow_i;
use qverify::{Monomial, ParamPoint, Rational};

/// `Π_{k<n} (1 − x·base^k)`, written out term by term.
pub fn poch(x: &Rational, base: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, k| {
        acc * (Rational::one() - x * pow_i(base, k as i64).unwrap())
    })
}

/// `(x; base)_∞` truncated to `depth` factors at `bits` of precision.
pub fn truncated_infinite(x: &Rational, base: &Rational, depth: usize, bits: u32) -> Real {
    let one = Real::one(bits);
    let b = Real::from_rational(base, bits);
    let mut term = Real::from_rational(x, bits);
    let mut acc = one.clone();
    for _ in 0..depth {
        acc = &acc * &(&one - &term);
        term = &term * &b;
    }
    acc
}

/// `k`-th term of `_rφ_s[num; den; base, x]` straight from the definition
/// (no contraction, no recurrence).
pub fn phi_term(
    num: &[Rational],
    den: &[Rational],
    base: &Rational,
    x: &Rational,
    k: usize,
) -> Rational {
    let mut t = pow_i(x, k as i64).unwrap();
    for a in num {
        t *= poch(a, base, k);
    }
    let mut d = poch(base, base, k);
    for b in den {
        d *= poch(b, base, k);
    }
    let extra = 1 + den.len() as i64 - num.len() as i64;
    if extra != 0 {
        let kk = k as i64;
        let sign = if kk % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        t *= pow_i(&(sign * pow_i(base, kk * (kk - 1) / 2).unwrap()), extra).unwrap();
    }
    t / d
}

/// Coefficient list of a series in `z` from per-term values placed at `power·k`.
pub fn phi_coeffs(
    num: &[Rational],
    den: &[Rational],
    base: &Rational,
    x: &Rational,
    power: usize,
    order: usize,
) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order + 1];
    for k in 0..=order / power {
        out[power * k] = phi_term(num, den, base, x, k);
    }
    out
}

/// Rising factorial `(x)_k`.
pub fn rising(x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| {
        acc * (x + Rational::from_integer(i.into()))
    })
}

pub fn factorial(k: usize) -> Rational {
    rising(&Rational::one(), k)
}

/// Coefficients of `_pF_q[num; den; x·z^power]` from the definition.
pub fn f_coeffs(
    num: &[Rational],
    den: &[Rational],
    x: &Rational,
    power: usize,
    order: usize,
) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order + 1];
    for k in 0..=order / power {
        let mut t = pow_i(x, k as i64).unwrap() / factorial(k);
        for a in num {
            t *= rising(a, k);
        }
        for b in den {
            t /= rising(b, k);
        }
        out[power * k] = t;
    }
    out
}

/// Plain double-loop Cauchy product.
pub fn convolve(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| (0..=k).map(|i| &a[i] * &b[k - i]).sum())
        .collect()
}

pub fn ev(m: &Monomial, p: &ParamPoint) -> Rational {
    m.eval(p).unwrap()
}

pub fn r(n: i64, d: i64) -> Rational {
    qverify::rat(n, d)
}
