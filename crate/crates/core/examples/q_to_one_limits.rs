//! Numeric q → 1 limits of the two product formulas.
//!
//! Run with `cargo run --example q_to_one_limits`.

use qverify::limits::{limit_check, LimitSpec, LimitTarget};
use qverify::rat;

fn main() -> qverify::Result<()> {
    for target in LimitTarget::ALL {
        for (alpha, beta) in [(rat(1, 1), rat(1, 2)), (rat(1, 3), rat(1, 5))] {
            let report = limit_check(&LimitSpec::new(target, alpha, beta))?;
            println!(
                "{} alpha={} beta={} passed={} final error {:.3e}",
                report.target, report.alpha, report.beta, report.passed, report.final_error
            );
            for (q, row) in report.q_values.iter().zip(&report.errors).skip(6) {
                let cells: Vec<String> = row.iter().map(|e| format!("{e:.1e}")).collect();
                println!("  q = {q:>11}  {}", cells.join(" "));
            }
        }
    }
    Ok(())
}
