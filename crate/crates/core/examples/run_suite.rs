//! Seeded sampling of admissible points, a parallel suite run and JSON output.
//!
//! Run with `cargo run --example run_suite`.

use qverify::cli::{render_json, RunOutput};
use qverify::identities::{run_suite, sample_case, IdentityId, Sampler};

fn main() -> qverify::Result<()> {
    let sampler = Sampler::new(42, 9);
    let mut cases = Vec::new();
    for trial in 0..2 {
        let (case, _) = sample_case(IdentityId::Thm3, None, 12, &sampler, trial)?;
        cases.push(case);
        let (case, _) = sample_case(IdentityId::Gasper, Some(2), 2, &sampler, trial)?;
        cases.push(case);
    }
    let reports = run_suite(&cases);
    for r in &reports {
        println!("{r}");
    }
    let output = RunOutput {
        reports,
        limits: Vec::new(),
    };
    println!("{}", render_json(&output));
    Ok(())
}
