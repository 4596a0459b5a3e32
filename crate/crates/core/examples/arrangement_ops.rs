//! Restriction, localization and products of arrangements.
use matfree::arrangement::{
    intersection_subspace, localization, product, restrict_arrangement, restriction_size, Arrangement,
};

fn main() -> matfree::error::Result<()> {
    let a = Arrangement::parse("conductor 1\ndim 3\n1 ; 0 ; 0\n0 ; 1 ; 0\n0 ; 0 ; 1\n1 ; -1 ; 0\n1 ; 0 ; -1\n0 ; 1 ; -1\n")?;
    println!("A3 braid arrangement with coordinate hyperplanes: |A| = {}", a.len());
    for (i, h) in a.hyperplanes().iter().enumerate() {
        println!("  |A^H{}| = {}", i + 1, restriction_size(&a, h)?);
    }
    let r = restrict_arrangement(&a, &a.hyperplanes()[3])?;
    println!("restriction to H4:\n{}", r.to_text());

    let x = intersection_subspace(&a.hyperplanes()[..2])?;
    let loc = localization(&a, &x);
    println!("localization at H1 ∩ H2 has {} hyperplanes", loc.len());

    let p = product(&a, &loc);
    println!("product: dim {}, |A| = {}", p.dim(), p.len());
    Ok(())
}
