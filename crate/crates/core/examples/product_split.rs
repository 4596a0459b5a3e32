//! Certificates of a product arrangement and their factors.
use matfree::catalog;
use matfree::certfile::format_blocks;
use matfree::matkernel::{product_partition, split_product_certificate, verify_mat_partition};

fn main() -> matfree::error::Result<()> {
    let cert = |name: &str| -> matfree::error::Result<_> {
        let e = catalog::named(name)?;
        Ok(verify_mat_partition(e.arrangement()?, e.blocks().expect("built-in partition"))?
            .certified()
            .expect("built-in partition verifies"))
    };
    let h3 = cert("H3")?;
    let g25 = cert("G25")?;
    let p = product_partition(&h3, &g25)?;
    println!("H3 x G25: {} hyperplanes, exponents {}", p.arrangement.len(), p.exponents);
    println!("blocks {}", format_blocks(&p.blocks));

    let (left, right) = split_product_certificate(&p, 3)?;
    println!("factors: {} and {}", left.exponents, right.exponents);
    Ok(())
}
