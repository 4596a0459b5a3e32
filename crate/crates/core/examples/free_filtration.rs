//! A chain of free subarrangements read off a certificate.
use matfree::catalog;
use matfree::matkernel::{free_filtration, verify_mat_partition};

fn main() -> matfree::error::Result<()> {
    let e = catalog::named("H3")?;
    let c = verify_mat_partition(e.arrangement()?, e.blocks().expect("built-in partition"))?
        .certified()
        .expect("built-in partition verifies");
    for step in free_filtration(&c)? {
        println!("{:>2}  +H{:<2}  {}", step.size, step.added + 1, step.exponents);
    }
    Ok(())
}
