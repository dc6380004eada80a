use num_traits::{One, Zero};

use super::{IdentityId, VerificationReport};
use crate::error::{Error, Result};
use crate::hyper::{
    f_series, phi_series, phi_terminating_value, thm4_middle_series, FSpec, PhiSpec,
};
use crate::limits::Real;
use crate::qcore::rational::{int, pow_i, rat};
use crate::qcore::{
    eval_reduced, mono, reduce_poch_quotient, Monomial, ParamPoint, PochFactor, Rational, Symbol,
};
use crate::series::TruncatedSeries;

use Symbol::{A, B, C, E, Q, R, S, T, Y};

/// What a check found: `None` when both sides agree.
type Outcome = Option<(usize, Rational, Rational, Option<String>)>;

fn finish(
    id: IdentityId,
    p: &ParamPoint,
    n: Option<usize>,
    order: usize,
    body: impl FnOnce() -> Result<Outcome>,
) -> VerificationReport {
    let report = VerificationReport::new(id, p, n, order);
    match body() {
        Ok(None) => report,
        Ok(Some((index, lhs, rhs, detail))) => report.fail(index, lhs, rhs, detail),
        Err(err) => report.error(&err),
    }
}

fn compare_values(lhs: Rational, rhs: Rational) -> Outcome {
    (lhs != rhs).then_some((0, lhs, rhs, None))
}

fn compare_series(lhs: &TruncatedSeries, rhs: &TruncatedSeries, label: &str) -> Outcome {
    lhs.first_difference(rhs)
        .map(|(i, l, r)| (i, l, r, Some(label.to_string())))
}

/// Odd coefficients of a series in `z²` must vanish identically.
fn assert_even(s: &TruncatedSeries, label: &str) -> Outcome {
    let odd = s.odd_part();
    odd.coeffs().iter().position(|c| !c.is_zero()).map(|i| {
        (
            i,
            odd.coeff(i),
            Rational::zero(),
            Some(format!("{label} has odd powers")),
        )
    })
}

fn q_mono(e: i64) -> Monomial {
    Monomial::q_pow(e)
}

fn inf(args: &[Monomial], step: u32) -> Vec<PochFactor> {
    args.iter()
        .cloned()
        .map(|m| PochFactor::infinite(m, step))
        .collect()
}

fn neg_z() -> Monomial {
    -Monomial::one()
}

/// Terminating q-Watson summation with `b = q^{−n}`.
///
/// `_4φ_3[a, b, c^½, −c^½; (abq)^½, −(abq)^½, c; q, q]
///   = a^{n/2} (aq, bq, cq/a, cq/b; q²)_∞ / (q, abq, cq, cq/ab; q²)_∞`
pub fn check_thm1(n: usize, p: &ParamPoint) -> VerificationReport {
    finish(IdentityId::Thm1, p, Some(n), n, || {
        p.require(&[R, S, T])?;
        let ni = n as i64;
        let b = q_mono(-ni);
        let sqrt_abq = mono(&[(R, 1), (T, 1 - ni)]);
        let lhs_spec = PhiSpec::new(
            vec![A.into(), b, S.into(), -Monomial::sym(S)],
            vec![sqrt_abq.clone(), -sqrt_abq, C.into()],
            1,
        )
        .argument(q_mono(1), 1);
        let lhs = phi_terminating_value(&lhs_spec, p, n)?;

        let numer = [
            mono(&[(A, 1), (Q, 1)]),
            q_mono(1 - ni),
            mono(&[(C, 1), (A, -1), (Q, 1)]),
            mono(&[(C, 1), (Q, 1 + ni)]),
        ];
        let denom = [
            q_mono(1),
            mono(&[(A, 1), (Q, 1 - ni)]),
            mono(&[(C, 1), (Q, 1)]),
            mono(&[(C, 1), (A, -1), (Q, 1 + ni)]),
        ];
        let reduced = reduce_poch_quotient(&inf(&numer, 2), &inf(&denom, 2))?;
        let rhs = pow_i(p.get(R)?, ni)? * eval_reduced(&reduced, p)?;
        Ok(
            compare_values(lhs, rhs)
                .map(|(i, l, r, _)| (i, l, r, Some(format!("rhs = {reduced}")))),
        )
    })
}

fn thm2_rhs_factors(a: &Monomial, c: &Monomial) -> (Vec<PochFactor>, Vec<PochFactor>) {
    let e: Monomial = E.into();
    let ei = e.recip();
    let q = q_mono(1);
    let numer = [
        &e * a,
        &(&e * &q) * &a.recip(),
        &(&(c * a) * &q) * &ei,
        &(&(c * &q_mono(2)) * &a.recip()) * &ei,
    ];
    let denom = [e.clone(), &(c * &q) * &ei];
    (inf(&numer, 2), inf(&denom, 1))
}

fn thm2_lhs_spec(a: &Monomial, sqrt_c: &Monomial, c: &Monomial) -> PhiSpec {
    let e: Monomial = E.into();
    PhiSpec::new(
        vec![a.clone(), &q_mono(1) * &a.recip(), sqrt_c.clone(), -sqrt_c],
        vec![-q_mono(1), e.clone(), &(c * &q_mono(1)) * &e.recip()],
        1,
    )
    .argument(q_mono(1), 1)
}

/// Terminating q-Whipple summation with `a = q^{−n}`.
///
/// `_4φ_3[a, q/a, c^½, −c^½; −q, e, cq/e; q, q]
///   = q^{n(n+1)/2} (ea, eq/a, caq/e, cq²/ae; q²)_∞ / (e, cq/e; q)_∞`
pub fn check_thm2(n: usize, p: &ParamPoint) -> VerificationReport {
    finish(IdentityId::Thm2, p, Some(n), n, || {
        p.require(&[S, E])?;
        let a = q_mono(-(n as i64));
        let c: Monomial = C.into();
        let lhs = phi_terminating_value(&thm2_lhs_spec(&a, &S.into(), &c), p, n)?;
        let (numer, denom) = thm2_rhs_factors(&a, &c);
        let reduced = reduce_poch_quotient(&numer, &denom)?;
        let prefactor = pow_i(p.q()?, (n * (n + 1) / 2) as i64)?;
        let rhs = prefactor * eval_reduced(&reduced, p)?;
        Ok(
            compare_values(lhs, rhs)
                .map(|(i, l, r, _)| (i, l, r, Some(format!("rhs = {reduced}")))),
        )
    })
}

/// `Some(m)` when `x = q^m` exactly, for `|m| ≤ 64`.
fn as_q_power(x: &Rational, q: &Rational) -> Option<i64> {
    (-64..=64).find(|&m| pow_i(q, m).map(|v| &v == x).unwrap_or(false))
}

const VARIANT_TRUNCATION: usize = 200;
const VARIANT_BITS: u32 = 320;

fn truncated_inf(x: &Rational, base: &Rational) -> Real {
    let one = Real::one(VARIANT_BITS);
    let b = Real::from_rational(base, VARIANT_BITS);
    let mut term = Real::from_rational(x, VARIANT_BITS);
    let mut acc = one.clone();
    for _ in 0..VARIANT_TRUNCATION {
        acc = &acc * &(&one - &term);
        term = &term * &b;
    }
    acc
}

/// The q-Whipple sum with `c = q^{−2n}` (so `c^½ = q^{−n}`) and `a` free,
/// evaluated as printed. Informational: an irreducible right-hand side is
/// reported as an error carrying numeric values of both sides.
pub fn check_thm2_variant(n: usize, p: &ParamPoint) -> VerificationReport {
    finish(IdentityId::Thm2Variant, p, Some(n), n, || {
        p.require(&[A, E])?;
        let q = p.q()?;
        let ni = n as i64;
        let a = match as_q_power(p.get(A)?, q) {
            Some(m) => q_mono(m),
            None => A.into(),
        };
        let c = q_mono(-2 * ni);
        let lhs = phi_terminating_value(&thm2_lhs_spec(&a, &q_mono(-ni), &c), p, n)?;
        let prefactor = pow_i(q, ni * (ni + 1) / 2)?;
        let (numer, denom) = thm2_rhs_factors(&a, &c);
        match reduce_poch_quotient(&numer, &denom) {
            Ok(reduced) => {
                let rhs = prefactor * eval_reduced(&reduced, p)?;
                Ok(compare_values(lhs, rhs)
                    .map(|(i, l, r, _)| (i, l, r, Some(format!("informational; rhs = {reduced}")))))
            }
            Err(Error::Irreducible(why)) => {
                let mut rhs = Real::from_rational(&prefactor, VARIANT_BITS);
                for f in &numer {
                    rhs = &rhs * &truncated_inf(&f.argument.eval(p)?, &pow_i(q, f.step as i64)?);
                }
                for f in &denom {
                    let d = truncated_inf(&f.argument.eval(p)?, &pow_i(q, f.step as i64)?);
                    if d.is_zero() {
                        return Err(Error::Pole(format!("({};q)_inf vanishes", f.argument)));
                    }
                    rhs = &rhs / &d;
                }
                let lhs_real = Real::from_rational(&lhs, VARIANT_BITS);
                Err(Error::Irreducible(format!(
                    "{why}; lhs = {lhs} ~ {lhs_real:.30}, rhs ~ {rhs:.30} \
                     ({VARIANT_TRUNCATION}-factor truncation)"
                )))
            }
            Err(other) => Err(other),
        }
    })
}

fn two_phi_one(num: [Monomial; 2], den: Monomial, step: u32, scalar: Monomial) -> PhiSpec {
    PhiSpec::new(num.to_vec(), vec![den], step).argument(scalar, 1)
}

/// `_2φ_1[a,−a;a²;q,z] · _2φ_1[b,−b;b²;q,−z]
///   = _4φ_3[ab,−ab,abq,−abq; a²q,b²q,a²b²; q², z²]`
pub fn check_thm3(p: &ParamPoint, order: usize) -> VerificationReport {
    finish(IdentityId::Thm3, p, None, order, || {
        let factor = |x: Symbol, scalar: Monomial| {
            let x: Monomial = x.into();
            two_phi_one([x.clone(), -&x], &x * &x, 1, scalar)
        };
        let lhs = phi_series(&factor(A, Monomial::one()), p, order)?.mul(&phi_series(
            &factor(B, neg_z()),
            p,
            order,
        )?);
        let ab = mono(&[(A, 1), (B, 1)]);
        let abq = &ab * &q_mono(1);
        let rhs_spec = PhiSpec::new(
            vec![ab.clone(), -&ab, abq.clone(), -&abq],
            vec![mono(&[(A, 2), (Q, 1)]), mono(&[(B, 2), (Q, 1)]), &ab * &ab],
            2,
        )
        .argument(Monomial::one(), 2);
        let rhs = phi_series(&rhs_spec, p, order)?;
        Ok(assert_even(&rhs, "rhs").or_else(|| compare_series(&lhs, &rhs, "product vs 4phi3")))
    })
}

/// Whipple-type product: the product of `_2φ_1[a,q/a;−q;q,z]` and
/// `_2φ_1[b,q/b;−q;q,−z]` equals the single sum, whose even part is the
/// first `_4φ_3` and whose odd part is `−(a−b)(1−q/ab)/(1−q²) · z ·` the second.
pub fn check_thm4(p: &ParamPoint, order: usize) -> VerificationReport {
    finish(IdentityId::Thm4, p, None, order, || {
        let q = p.q()?;
        let (a, b) = (p.get(A)?, p.get(B)?);
        let factor = |x: Symbol, scalar: Monomial| {
            let x: Monomial = x.into();
            two_phi_one([x.clone(), &q_mono(1) * &x.recip()], -q_mono(1), 1, scalar)
        };
        let product = phi_series(&factor(A, Monomial::one()), p, order)?.mul(&phi_series(
            &factor(B, neg_z()),
            p,
            order,
        )?);
        let middle = thm4_middle_series(p, order)?;

        let ab = mono(&[(A, 1), (B, 1)]);
        let a_over_b = mono(&[(A, 1), (B, -1)]);
        let even_spec = PhiSpec::new(
            vec![
                ab.clone(),
                &q_mono(2) * &ab.recip(),
                &a_over_b * &q_mono(1),
                &a_over_b.recip() * &q_mono(1),
            ],
            vec![-q_mono(2), q_mono(1), -q_mono(1)],
            2,
        )
        .argument(Monomial::one(), 2);
        let odd_spec = PhiSpec::new(
            vec![
                &ab * &q_mono(1),
                &q_mono(3) * &ab.recip(),
                &a_over_b * &q_mono(2),
                &a_over_b.recip() * &q_mono(2),
            ],
            vec![-q_mono(2), q_mono(3), -q_mono(3)],
            2,
        )
        .argument(Monomial::one(), 2);
        let even = phi_series(&even_spec, p, order)?;
        let odd_raw = phi_series(&odd_spec, p, order)?;
        let prefactor = -(a - b) * (int(1) - q / (a * b)) / (int(1) - q * q);
        let odd = odd_raw.shift(1).scale(&prefactor);

        Ok(
            compare_series(&product, &middle, "(i) product vs single sum")
                .or_else(|| assert_even(&even, "first 4phi3"))
                .or_else(|| assert_even(&odd_raw, "second 4phi3"))
                .or_else(|| {
                    compare_series(&middle.even_part(), &even, "(ii) even part vs first 4phi3")
                })
                .or_else(|| {
                    compare_series(&middle.odd_part(), &odd, "(iii) odd part vs second 4phi3")
                }),
        )
    })
}

/// `_2φ_1[a,b;−ab;q,z] · _2φ_1[a,b;−ab;q,−z]
///   = _4φ_3[a²,b²,ab,abq; a²b²,−ab,−abq; q², z²]`
pub fn check_srivastava(p: &ParamPoint, order: usize) -> VerificationReport {
    finish(IdentityId::Srivastava, p, None, order, || {
        let ab = mono(&[(A, 1), (B, 1)]);
        let factor = |scalar| two_phi_one([A.into(), B.into()], -&ab, 1, scalar);
        let lhs = phi_series(&factor(Monomial::one()), p, order)?.mul(&phi_series(
            &factor(neg_z()),
            p,
            order,
        )?);
        let abq = &ab * &q_mono(1);
        let rhs_spec = PhiSpec::new(
            vec![
                Monomial::power(A, 2),
                Monomial::power(B, 2),
                ab.clone(),
                abq.clone(),
            ],
            vec![&ab * &ab, -&ab, -&abq],
            2,
        )
        .argument(Monomial::one(), 2);
        let rhs = phi_series(&rhs_spec, p, order)?;
        Ok(assert_even(&rhs, "rhs").or_else(|| compare_series(&lhs, &rhs, "product vs 4phi3")))
    })
}

/// `_2φ_1[a²,b²;a²b²q;q²,z] · _2φ_1[a²,b²;a²b²q;q²,qz]
///   = _4φ_3[a²,b²,ab,−ab; a²b², abq^½, −abq^½; q, z]`
pub fn check_jackson(p: &ParamPoint, order: usize) -> VerificationReport {
    finish(IdentityId::Jackson, p, None, order, || {
        p.require(&[T])?;
        let (a2, b2) = (Monomial::power(A, 2), Monomial::power(B, 2));
        let ab = mono(&[(A, 1), (B, 1)]);
        let den = &(&a2 * &b2) * &q_mono(1);
        let factor = |scalar| two_phi_one([a2.clone(), b2.clone()], den.clone(), 2, scalar);
        let lhs = phi_series(&factor(Monomial::one()), p, order)?.mul(&phi_series(
            &factor(q_mono(1)),
            p,
            order,
        )?);
        let abt = &ab * &Monomial::sym(T);
        let rhs_spec = PhiSpec::new(
            vec![a2.clone(), b2.clone(), ab.clone(), -&ab],
            vec![&a2 * &b2, abt.clone(), -&abt],
            1,
        );
        let rhs = phi_series(&rhs_spec, p, order)?;
        Ok(compare_series(&lhs, &rhs, "product vs 4phi3"))
    })
}

/// Terminating q-Clausen with `a = q^{−n}`:
/// `_4φ_3[a,b,aby,ab/y; abq^½,−abq^½,−ab; q,q]²
///   = _5φ_4[a²,b²,ab,aby,ab/y; a²b²,abq^½,−abq^½,−ab; q,q]`
pub fn check_gasper(n: usize, p: &ParamPoint) -> VerificationReport {
    finish(IdentityId::Gasper, p, Some(n), n, || {
        p.require(&[B, Y, T])?;
        let a = q_mono(-(n as i64));
        let ab = &a * &Monomial::sym(B);
        let aby = &ab * &Monomial::sym(Y);
        let ab_y = &ab * &Monomial::power(Y, -1);
        let abt = &ab * &Monomial::sym(T);
        let four = PhiSpec::new(
            vec![a.clone(), B.into(), aby.clone(), ab_y.clone()],
            vec![abt.clone(), -&abt, -&ab],
            1,
        )
        .argument(q_mono(1), 1);
        let five = PhiSpec::new(
            vec![&a * &a, Monomial::power(B, 2), ab.clone(), aby, ab_y],
            vec![&ab * &ab, abt.clone(), -&abt, -&ab],
            1,
        )
        .argument(q_mono(1), 1);
        let root = phi_terminating_value(&four, p, n)?;
        let rhs = phi_terminating_value(&five, p, 2 * n)?;
        Ok(compare_values(&root * &root, rhs))
    })
}

fn classical_point(a: &Rational, b: &Rational) -> Result<ParamPoint> {
    ParamPoint::classical().set(A, a.clone())?.set(B, b.clone())
}

fn classical_report(
    id: IdentityId,
    a: &Rational,
    b: &Rational,
    order: usize,
    body: impl FnOnce() -> Result<Outcome>,
) -> VerificationReport {
    match classical_point(a, b) {
        Ok(p) => finish(id, &p, None, order, body),
        Err(err) => VerificationReport::new(id, &ParamPoint::classical(), None, order).error(&err),
    }
}

/// `(_2F_1[a,b;a+b+½;z])² = _3F_2[2a,2b,a+b; 2a+2b,a+b+½; z]`
pub fn check_clausen(a: &Rational, b: &Rational, order: usize) -> VerificationReport {
    classical_report(IdentityId::Clausen, a, b, order, || {
        let half = rat(1, 2);
        let s = a + b;
        let f = f_series(
            &FSpec::new(vec![a.clone(), b.clone()], vec![&s + &half]),
            order,
        )?;
        let rhs = f_series(
            &FSpec::new(
                vec![a * int(2), b * int(2), s.clone()],
                vec![&s * int(2), &s + &half],
            ),
            order,
        )?;
        Ok(compare_series(&f.mul(&f), &rhs, "square vs 3F2"))
    })
}

/// `_1F_1[a;2a;z] · _1F_1[b;2b;−z] = _2F_3[(a+b)/2, (a+b+1)/2; a+½, b+½, a+b; z²/4]`
pub fn check_bailey_2_11(a: &Rational, b: &Rational, order: usize) -> VerificationReport {
    classical_report(IdentityId::Bailey211, a, b, order, || {
        let half = rat(1, 2);
        let s = a + b;
        let left = f_series(&FSpec::new(vec![a.clone()], vec![a * int(2)]), order)?;
        let right = f_series(
            &FSpec::new(vec![b.clone()], vec![b * int(2)]).argument(int(-1), 1),
            order,
        )?;
        let rhs = f_series(
            &FSpec::new(
                vec![&s * &half, (&s + int(1)) * &half],
                vec![a + &half, b + &half, s.clone()],
            )
            .argument(rat(1, 4), 2),
            order,
        )?;
        Ok(compare_series(&left.mul(&right), &rhs, "product vs 2F3"))
    })
}

/// Formal identity
/// `_2F_0[a,1−a;;z] · _2F_0[b,1−b;;−z] = _4F_1[…; ½; 4z²] − (a−b)(a+b−1) z _4F_1[…; 3/2; 4z²]`.
pub fn check_bailey_2_08(a: &Rational, b: &Rational, order: usize) -> VerificationReport {
    classical_report(IdentityId::Bailey208, a, b, order, || {
        let half = rat(1, 2);
        let one = Rational::one();
        let left = f_series(&FSpec::new(vec![a.clone(), &one - a], vec![]), order)?;
        let right = f_series(
            &FSpec::new(vec![b.clone(), &one - b], vec![]).argument(int(-1), 1),
            order,
        )?;
        let (d, s) = (a - b, a + b);
        let even = f_series(
            &FSpec::new(
                vec![
                    (&one + &d) * &half,
                    (&one - &d) * &half,
                    &s * &half,
                    (int(2) - &s) * &half,
                ],
                vec![half.clone()],
            )
            .argument(int(4), 2),
            order,
        )?;
        let odd = f_series(
            &FSpec::new(
                vec![
                    (int(2) + &d) * &half,
                    (int(2) - &d) * &half,
                    (&one + &s) * &half,
                    (int(3) - &s) * &half,
                ],
                vec![rat(3, 2)],
            )
            .argument(int(4), 2),
            order,
        )?;
        let prefactor = -(&d * (&s - &one));
        let rhs = even.add(&odd.shift(1).scale(&prefactor));
        Ok(compare_series(
            &left.mul(&right),
            &rhs,
            "product vs 4F1 combination",
        ))
    })
}

pub(super) fn classical_with_point(
    id: IdentityId,
    p: &ParamPoint,
    order: usize,
) -> VerificationReport {
    let (a, b) = match (p.get(A), p.get(B)) {
        (Ok(a), Ok(b)) => (a.clone(), b.clone()),
        (Err(err), _) | (_, Err(err)) => {
            return VerificationReport::new(id, p, None, order).error(&err)
        }
    };
    match id {
        IdentityId::Clausen => check_clausen(&a, &b, order),
        IdentityId::Bailey211 => check_bailey_2_11(&a, &b, order),
        IdentityId::Bailey208 => check_bailey_2_08(&a, &b, order),
        _ => unreachable!("{id} is not a classical identity"),
    }
}
