//! Products of two _2φ_1 series expressed as a single series in z²,
//! and the parity split of the Whipple-type product.
//!
//! Run with `cargo run --example product_formulas`.

use qverify::hyper::thm4_middle_series;
use qverify::identities::{check_thm3, check_thm4};
use qverify::ParamPoint;

fn main() -> qverify::Result<()> {
    let p = ParamPoint::parse("a=1/2,b=1/3,q=1/4")?;
    println!("{}", check_thm3(&p, 40));
    println!("{}", check_thm4(&p, 40));

    let middle = thm4_middle_series(&p, 5)?;
    println!("single sum  {middle}");
    println!("even part   {}", middle.even_part());
    println!("odd part    {}", middle.odd_part());

    // a = b: the odd part disappears
    let same = ParamPoint::parse("a=2/3,b=2/3,q=1/4")?;
    println!(
        "a = b, odd part {}",
        thm4_middle_series(&same, 5)?.odd_part()
    );
    Ok(())
}
