//! Catalog contents: built-in forms, Weyl and monomial families, facts.
use matfree::catalog;
use matfree::matkernel::verify_mat_partition;

fn main() -> matfree::error::Result<()> {
    println!("catalog: {}", catalog::list().join(", "));
    for name in ["A4", "B3", "D4", "E6", "E7", "E8", "G(4,1,3)"] {
        let e = catalog::named(name)?;
        let a = e.arrangement()?;
        let v = verify_mat_partition(a, e.blocks().expect("built-in partition"))?;
        let exps = v.certified().map(|c| c.exponents.to_string()).unwrap_or_else(|| "rejected".into());
        println!("{name:>9}: |A| = {:>3}, exponents {exps}", a.len());
    }
    let g32 = catalog::facts("G32")?;
    println!("G32 (tabulated): exponents {}, note {:?}", g32.exponents, g32.note);
    Ok(())
}
