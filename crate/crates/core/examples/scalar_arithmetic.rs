//! Exact arithmetic in cyclotomic fields.
use matfree::scalar::{arith, make_scalar, ArithOp, CycloScalar, ScalarSpec};

fn main() -> matfree::error::Result<()> {
    let phi = make_scalar(ScalarSpec::GoldenRatio)?;
    let inv = make_scalar(ScalarSpec::GoldenRatioReciprocal)?;
    println!("phi = {phi}");
    println!("phi * (1/phi) = {}", arith(&phi, &inv, ArithOp::Mul)?);
    println!("phi^2 - phi = {}", &(&phi * &phi) - &phi);

    let w = make_scalar(ScalarSpec::RootOfUnity { n: 3, k: 1 })?;
    println!("1 + w + w^2 = {}", &(&CycloScalar::one(3) + &w) + &(&w * &w));

    // mixing fields requires lifting to a common conductor
    let w15 = w.lift(15)?;
    let phi15 = phi.lift(15)?;
    let sum = &w15 + &phi15;
    let (re, im) = sum.to_complex();
    println!("w + phi in Q(z_15) = {sum}  ~ {re:.6} + {im:.6}i");
    println!("parsed: {}", CycloScalar::parse("1/2 - z^2", 5).expect("valid scalar"));
    Ok(())
}
