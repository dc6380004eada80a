//! The terminating q-Watson sum, checked exactly for a range of n.
//!
//! Run with `cargo run --example q_watson_sum`.

use qverify::identities::check_thm1;
use qverify::ParamPoint;

fn main() -> qverify::Result<()> {
    // a, c, q must be rational squares: the sum involves their square roots
    let p = ParamPoint::parse("a=1/9,c=4/25,q=1/4")?;
    for n in 0..=8 {
        println!("{}", check_thm1(n, &p));
    }
    // (abq)^½ = 1 at n = 2 here: the left side has a pole
    println!(
        "{}",
        check_thm1(2, &ParamPoint::parse("a=1/4,c=1/9,q=1/4")?)
    );
    Ok(())
}
