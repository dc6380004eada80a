//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero when any criterion fails.

mod common;

use std::time::{Duration, Instant};

use clap::Parser;
use num_traits::{Signed, Zero};
use qverify::cli::{render_json, run, RunConfig, RunOutput};
use qverify::identities::{IdentityId, Status, VerificationReport};
use qverify::limits::{limit_check, LimitReport, LimitSpec, LimitTarget, Real};
use qverify::qcore::rational::pow_i;
use qverify::qcore::{eval_reduced, mono, reduce_poch_quotient, PochFactor};
use qverify::{Error, Monomial, ParamPoint, Rational, Symbol::*};

struct Outcome {
    label: &'static str,
    passed: bool,
    elapsed: Duration,
    budget: Option<Duration>,
    note: String,
}

fn criterion(
    label: &'static str,
    budget_secs: Option<u64>,
    body: impl FnOnce() -> Result<String, String>,
) -> Outcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let budget = budget_secs.map(Duration::from_secs);
    let within = budget.is_none_or(|b| elapsed <= b);
    let (passed, mut note) = match result {
        Ok(note) => (within, note),
        Err(why) => (false, why),
    };
    if !within {
        note.push_str(&format!("; over budget {:?}", budget.unwrap()));
    }
    Outcome {
        label,
        passed,
        elapsed,
        budget,
        note,
    }
}

fn sampled(args: &[&str]) -> Result<RunOutput, String> {
    let config = RunConfig::try_parse_from(std::iter::once("verify").chain(args.iter().copied()))
        .map_err(|e| e.to_string())?;
    run(&config).map_err(|e| e.to_string())
}

fn require_all_pass(reports: &[VerificationReport], expected: usize) -> Result<String, String> {
    if reports.len() != expected {
        return Err(format!("{} reports, expected {expected}", reports.len()));
    }
    if let Some(bad) = reports.iter().find(|r| !r.passed()) {
        return Err(bad.to_string());
    }
    Ok(format!("{expected} exact checks"))
}

// 1. terminating q-Watson

/// Direct evaluation of the terminating left side with uncontracted pairs.
fn thm1_lhs(p: &ParamPoint, n: usize) -> Rational {
    let get = |s| p.get(s).unwrap().clone();
    let (a, c, s, q) = (get(A), get(C), get(S), get(Q));
    let b = pow_i(&q, -(n as i64)).unwrap();
    // ±(abq)^½ both appear, so the sign of the root is immaterial
    let root = get(R) * pow_i(&get(T), 1 - n as i64).unwrap();
    (0..=n)
        .map(|k| {
            common::phi_term(
                &[a.clone(), b.clone(), s.clone(), -&s],
                &[root.clone(), -&root, c.clone()],
                &q,
                &q,
                k,
            )
        })
        .sum()
}

fn thm1_rhs_is_certified_zero(n: usize) -> bool {
    let ni = n as i64;
    let factors = |args: [Monomial; 4]| {
        args.into_iter()
            .map(|m| PochFactor::infinite(m, 2))
            .collect::<Vec<_>>()
    };
    let numer = factors([
        mono(&[(A, 1), (Q, 1)]),
        Monomial::q_pow(1 - ni),
        mono(&[(C, 1), (A, -1), (Q, 1)]),
        mono(&[(C, 1), (Q, 1 + ni)]),
    ]);
    let denom = factors([
        Monomial::q_pow(1),
        mono(&[(A, 1), (Q, 1 - ni)]),
        mono(&[(C, 1), (Q, 1)]),
        mono(&[(C, 1), (A, -1), (Q, 1 + ni)]),
    ]);
    matches!(reduce_poch_quotient(&numer, &denom), Ok(r) if r.zero)
}

fn criterion_1() -> Result<String, String> {
    let out = sampled(&["--identity", "thm1", "--n-max", "30", "--trials", "10"])?;
    require_all_pass(&out.reports, 310)?;
    let mut odd = 0;
    for report in &out.reports {
        let n = report.n.unwrap();
        if n % 2 == 1 {
            if !thm1_rhs_is_certified_zero(n) {
                return Err(format!("no zero certificate at n = {n}"));
            }
            if !thm1_lhs(&report.point, n).is_zero() {
                return Err(format!("left side nonzero at n = {n}: {report}"));
            }
            odd += 1;
        }
    }
    Ok(format!(
        "310 exact checks; {odd} odd-n cases vanish on both sides"
    ))
}

// 2. terminating q-Whipple

fn criterion_2() -> Result<String, String> {
    let out = sampled(&["--identity", "thm2", "--n-max", "30", "--trials", "10"])?;
    require_all_pass(&out.reports, 310)
}

// 3. product formulas

fn criterion_3() -> Result<String, String> {
    let mut total = 0;
    for id in ["thm3", "thm4", "srivastava", "jackson"] {
        let out = sampled(&["--identity", id, "--order", "40", "--trials", "20"])?;
        require_all_pass(&out.reports, 20)?;
        total += 20;
    }
    Ok(format!("{total} points to order 40"))
}

// 4. terminating q-Clausen

fn criterion_4() -> Result<String, String> {
    let out = sampled(&["--identity", "gasper", "--n-max", "15", "--trials", "10"])?;
    require_all_pass(&out.reports, 160)
}

// 5. classical formulas

fn criterion_5() -> Result<String, String> {
    let mut total = 0;
    for id in ["clausen", "bailey_2_11", "bailey_2_08"] {
        let out = sampled(&["--identity", id, "--order", "30", "--trials", "10"])?;
        require_all_pass(&out.reports, 10)?;
        total += 10;
    }
    Ok(format!("{total} (a, b) pairs to order 30"))
}

// 6. q → 1 limits

fn limit_pairs() -> Vec<(Rational, Rational)> {
    qverify::cli::limit_pairs()
}

fn describe(r: &LimitReport) -> String {
    format!(
        "({}, {}): final error {:.2e}, monotone tail {}",
        r.alpha, r.beta, r.final_error, r.monotone_tail
    )
}

fn criterion_6(target: LimitTarget) -> Result<String, String> {
    let mut notes = Vec::new();
    let mut ok = true;
    for (alpha, beta) in limit_pairs() {
        let spec = LimitSpec::new(target, alpha, beta);
        assert_eq!(spec.tolerance, 1e-4);
        assert_eq!(spec.max_coeff, 6);
        let report = limit_check(&spec).map_err(|e| e.to_string())?;
        ok &= report.passed;
        notes.push(describe(&report));
    }
    let text = notes.join("; ");
    if ok {
        Ok(text)
    } else {
        Err(text)
    }
}

// 7. reducer

fn criterion_7() -> Result<String, String> {
    let inf = |m: Monomial, step| PochFactor::infinite(m, step);
    for m in 0..=10 {
        let numer = [inf(Monomial::q_pow(-2 * m), 2), inf(Monomial::sym(A), 1)];
        let denom = [inf(Monomial::sym(A), 1)];
        match reduce_poch_quotient(&numer, &denom) {
            Ok(r) if r.zero => {}
            other => return Err(format!("(q^-{};q²)_∞: {other:?}", 2 * m)),
        }
    }
    let irreducible = [
        (
            vec![inf(Monomial::sym(A), 1)],
            vec![inf(Monomial::sym(C), 1)],
        ),
        (
            vec![inf(Monomial::sym(A), 1)],
            vec![inf(mono(&[(A, 1), (Q, 1)]), 2)],
        ),
        (
            vec![inf(mono(&[(A, 2)]), 1), inf(Monomial::sym(C), 1)],
            vec![inf(mono(&[(A, 2), (Q, 1)]), 1)],
        ),
    ];
    for (numer, denom) in &irreducible {
        if !matches!(
            reduce_poch_quotient(numer, denom),
            Err(Error::Irreducible(_))
        ) {
            return Err("non-cancelling quotient was reduced".into());
        }
    }

    // truncated products at q = 1/8 agree within 10·|q|^200
    let q = common::r(1, 8);
    let p = ParamPoint::new(q.clone())
        .unwrap()
        .set(A, common::r(1, 3))
        .unwrap()
        .set(C, common::r(-2, 5))
        .unwrap();
    let quotients = [
        (
            vec![
                mono(&[(A, 1), (Q, 1)]),
                Monomial::q_pow(-1),
                mono(&[(C, 1), (A, -1), (Q, 1)]),
                mono(&[(C, 1), (Q, 3)]),
            ],
            vec![
                Monomial::q_pow(1),
                mono(&[(A, 1), (Q, -1)]),
                mono(&[(C, 1), (Q, 1)]),
                mono(&[(C, 1), (A, -1), (Q, 3)]),
            ],
            2,
        ),
        (
            vec![mono(&[(A, 1), (Q, -1)]), mono(&[(C, 1), (Q, 4)])],
            vec![mono(&[(A, 1), (Q, 2)]), mono(&[(C, 1), (Q, -1)])],
            1,
        ),
    ];
    const BITS: u32 = 1024;
    let bound = pow_i(&q.abs(), 200).unwrap() * common::r(10, 1);
    for (numer, denom, step) in quotients {
        let nf: Vec<_> = numer.iter().cloned().map(|m| inf(m, step)).collect();
        let df: Vec<_> = denom.iter().cloned().map(|m| inf(m, step)).collect();
        let reduced = reduce_poch_quotient(&nf, &df).map_err(|e| e.to_string())?;
        let exact = eval_reduced(&reduced, &p).map_err(|e| e.to_string())?;
        let base = pow_i(&q, step as i64).unwrap();
        let mut approx = Real::one(BITS);
        for m in &numer {
            approx = &approx * &common::truncated_infinite(&m.eval(&p).unwrap(), &base, 200, BITS);
        }
        for m in &denom {
            approx = &approx / &common::truncated_infinite(&m.eval(&p).unwrap(), &base, 200, BITS);
        }
        let gap = (&Real::from_rational(&exact, BITS) - &approx).abs();
        if gap > Real::from_rational(&(&bound * exact.abs()), BITS) {
            return Err(format!(
                "{reduced}: truncated products off by {:e}",
                gap.to_f64()
            ));
        }
    }
    Ok("zero certificates m = 0..10, 3 irreducible quotients, 2 numeric agreements".into())
}

// 8. determinism

fn criterion_8() -> Result<String, String> {
    let args = [
        "--identity",
        "all",
        "--order",
        "20",
        "--n-max",
        "6",
        "--trials",
        "3",
        "--seed",
        "2024",
        "--json",
    ];
    let first = render_json(&sampled(&args)?);
    let second = render_json(&sampled(&args)?);
    if first != second {
        return Err("json differs between identical runs".into());
    }
    let binary = |seed: &str| {
        std::process::Command::new(env!("CARGO_BIN_EXE_verify"))
            .args([
                "--identity",
                "thm4",
                "--order",
                "12",
                "--trials",
                "4",
                "--seed",
                seed,
                "--json",
            ])
            .output()
            .map(|o| o.stdout)
            .map_err(|e| e.to_string())
    };
    if binary("5")? != binary("5")? {
        return Err("binary output differs between identical runs".into());
    }
    Ok(format!("{} bytes identical", first.len()))
}

// 9. informational variant

fn criterion_9() -> Result<String, String> {
    let out = sampled(&[
        "--identity",
        "thm2_variant",
        "--n-max",
        "5",
        "--trials",
        "5",
    ])?;
    if out.reports.len() != 30 {
        return Err(format!("{} reports, expected 30", out.reports.len()));
    }
    if out.reports.iter().any(|r| r.identity.is_gating()) || IdentityId::Thm2Variant.is_gating() {
        return Err("variant reports must not gate".into());
    }
    let count = |s| out.reports.iter().filter(|r| r.status == s).count();
    for r in out.reports.iter().filter(|r| r.status != Status::Pass) {
        if r.detail.is_none() {
            return Err(format!("report without detail: {r}"));
        }
    }
    // a forced failure among them still leaves the exit code alone
    let mut poisoned = out.clone();
    let mut extra = poisoned.reports[0].clone();
    extra.status = Status::Fail;
    poisoned.reports.push(extra);
    if poisoned.exit_code() != qverify::cli::EXIT_PASS {
        return Err("variant failure changed the exit code".into());
    }
    Ok(format!(
        "30 informational reports: {} pass, {} fail, {} error",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Error)
    ))
}

fn main() {
    let outcomes = vec![
        criterion("1 thm1 suite", Some(30), criterion_1),
        criterion("2 thm2 suite", Some(30), criterion_2),
        criterion("3 product formulas", Some(60), criterion_3),
        criterion("4 gasper q-clausen", Some(30), criterion_4),
        criterion("5 classical formulas", Some(10), criterion_5),
        criterion("6 limits watson_2_11", Some(60), || {
            criterion_6(LimitTarget::Watson211)
        }),
        criterion("6 limits whipple_2_08", Some(60), || {
            criterion_6(LimitTarget::Whipple208)
        }),
        criterion("7 reducer properties", None, criterion_7),
        criterion("8 determinism", None, criterion_8),
        criterion("9 thm2_variant informational", None, criterion_9),
    ];
    let mut failed = 0;
    for o in &outcomes {
        let budget = o
            .budget
            .map(|b| format!(" / {}s", b.as_secs()))
            .unwrap_or_default();
        println!(
            "{} criterion {:32} {:7.2}s{budget}  {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.label,
            o.elapsed.as_secs_f64(),
            o.note
        );
        failed += usize::from(!o.passed);
    }
    println!(
        "acceptance: {} of {} criteria pass",
        outcomes.len() - failed,
        outcomes.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
