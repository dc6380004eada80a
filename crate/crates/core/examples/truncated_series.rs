//! Exact truncated power series and basic hypergeometric coefficients.
//!
//! Run with `cargo run --example truncated_series`.

use qverify::hyper::{f_series, phi_series, FSpec, PhiSpec};
use qverify::{rat, Monomial, ParamPoint, Symbol::*, TruncatedSeries};

fn main() -> qverify::Result<()> {
    let geometric = TruncatedSeries::from_coeffs(vec![rat(1, 1); 6]);
    let one_minus_z = TruncatedSeries::from_coeffs(vec![rat(1, 1), rat(-1, 1)]);
    println!("1/(1-z)          = {geometric}");
    println!("(1-z) * 1/(1-z)  = {}", geometric.mul(&one_minus_z));
    println!("even part        = {}", geometric.even_part());
    println!("z -> -z/2        = {}", geometric.scale_arg(&rat(-1, 2)));

    // _2φ_1[a, −a; a²; q, z]; the ± pair is contracted to (a²; q²)_k
    let p = ParamPoint::parse("a=1/2,q=1/3")?;
    let a = Monomial::sym(A);
    let spec = PhiSpec::new(vec![a.clone(), -&a], vec![&a * &a], 1);
    println!("2phi1[a,-a;a^2;q,z] = {}", phi_series(&spec, &p, 4)?);

    // the same series in z² and base q²
    let squared = spec.clone().argument(Monomial::one(), 2);
    println!("argument z^2        = {}", phi_series(&squared, &p, 6)?);

    // _2F_1[1/3, 1/5; 31/30; z]
    let f = FSpec::new(vec![rat(1, 3), rat(1, 5)], vec![rat(31, 30)]);
    println!("2F1                 = {}", f_series(&f, 4)?);

    // a denominator parameter that hits zero is a pole, never a silent 0/0
    let bad = FSpec::new(vec![rat(1, 2)], vec![rat(-2, 1)]);
    println!("1F1[1/2; -2; z]     : {}", f_series(&bad, 5).unwrap_err());
    Ok(())
}
