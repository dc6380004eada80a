//! Other product and Clausen-type formulas, q-analogues and classical.
//!
//! Run with `cargo run --example related_identities`.

use qverify::identities::{
    check_bailey_2_08, check_bailey_2_11, check_clausen, check_gasper, check_jackson,
    check_srivastava,
};
use qverify::{rat, ParamPoint};

fn main() -> qverify::Result<()> {
    let p = ParamPoint::parse("a=1/2,b=1/3,q=1/4")?;
    println!("{}", check_srivastava(&p, 30));
    println!("{}", check_jackson(&p, 30));

    // terminating q-Clausen: a = q^-n
    let g = ParamPoint::parse("b=1/3,y=2,q=1/4")?;
    for n in 0..=4 {
        println!("{}", check_gasper(n, &g));
    }

    let (a, b) = (rat(1, 3), rat(1, 5));
    println!("{}", check_clausen(&a, &b, 30));
    println!("{}", check_bailey_2_11(&a, &b, 30));
    println!("{}", check_bailey_2_08(&a, &b, 30));
    Ok(())
}
