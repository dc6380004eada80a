//! Reduces quotients of infinite q-shifted factorials to finite products.
//!
//! Run with `cargo run --example pochhammer_reduction`.

use qverify::qcore::{eval_reduced, mono, qpoch, reduce_poch_quotient, PochFactor};
use qverify::{rat, Monomial, ParamPoint, Symbol::*};

fn main() -> qverify::Result<()> {
    let inf = |m: Monomial, step| PochFactor::infinite(m, step);

    println!("(1/2; 1/3)_4 = {}", qpoch(&rat(1, 2), &rat(1, 3), 4));

    // (aq, q^-1, cq/a, cq^3; q²)_∞ / (q, aq^-1, cq, cq^3/a; q²)_∞
    let numer = [
        inf(mono(&[(A, 1), (Q, 1)]), 2),
        inf(Monomial::q_pow(-1), 2),
        inf(mono(&[(C, 1), (A, -1), (Q, 1)]), 2),
        inf(mono(&[(C, 1), (Q, 3)]), 2),
    ];
    let denom = [
        inf(Monomial::q_pow(1), 2),
        inf(mono(&[(A, 1), (Q, -1)]), 2),
        inf(mono(&[(C, 1), (Q, 1)]), 2),
        inf(mono(&[(C, 1), (A, -1), (Q, 3)]), 2),
    ];
    let reduced = reduce_poch_quotient(&numer, &denom)?;
    let p = ParamPoint::parse("a=1/4,c=1/9,q=1/8")?;
    println!("reduced: {reduced}");
    println!("value at {p}: {}", eval_reduced(&reduced, &p)?);

    // a factor (q^-2; q²)_∞ contains 1 − q^0
    let zero = reduce_poch_quotient(&[inf(Monomial::q_pow(-2), 2)], &[])?;
    println!("(q^-2;q^2)_inf reduces to zero: {}", zero.zero);

    // mixing steps: (a;q)_∞ = (a;q²)_∞ (aq;q²)_∞
    let split = reduce_poch_quotient(
        &[inf(Monomial::sym(A), 1)],
        &[inf(Monomial::sym(A), 2), inf(mono(&[(A, 1), (Q, 1)]), 2)],
    )?;
    println!("(a;q)_inf / ((a;q^2)_inf (aq;q^2)_inf) = {split}");

    match reduce_poch_quotient(&[inf(Monomial::sym(A), 1)], &[inf(Monomial::sym(C), 1)]) {
        Err(err) => println!("(a;q)_inf / (c;q)_inf: {err}"),
        Ok(r) => println!("unexpected reduction {r}"),
    }
    Ok(())
}
