//! The terminating q-Whipple sum (a = q^-n), and the informational variant
//! with c = q^-2n and a left free.
//!
//! Run with `cargo run --example q_whipple_sum`.

use qverify::identities::{check_thm2, check_thm2_variant};
use qverify::ParamPoint;

fn main() -> qverify::Result<()> {
    let p = ParamPoint::parse("c=1/9,e=1/5,q=1/4")?;
    for n in 0..=6 {
        println!("{}", check_thm2(n, &p));
    }

    println!();
    // a = q^-1 and c = q^-2 is a point of both forms
    println!(
        "{}",
        check_thm2_variant(1, &ParamPoint::parse("a=4,e=1/5,q=1/4")?)
    );
    // generic a: the right side does not reduce; both values are reported
    println!(
        "{}",
        check_thm2_variant(0, &ParamPoint::parse("a=2/3,e=1/5,q=1/4")?)
    );
    Ok(())
}
