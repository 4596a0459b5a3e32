//! Checking an ordered partition block by block.
use matfree::catalog;
use matfree::certfile::{format_blocks, parse_blocks};
use matfree::matkernel::{verify_mat_partition, Verification};

fn main() -> matfree::error::Result<()> {
    let entry = catalog::named("G25")?;
    let a = entry.arrangement()?;
    let blocks = entry.blocks().expect("built-in partition");
    match verify_mat_partition(a, blocks)? {
        Verification::Certified(c) => {
            println!("{} certified, exponents {}", format_blocks(&c.blocks), c.exponents);
            for (k, r) in c.reports.iter().enumerate() {
                let members: Vec<usize> = r.members.iter().map(|i| i + 1).collect();
                println!("  step {}: {members:?} defects {:?} -> {:?}", k + 1, r.defects, r.exponents_after);
            }
        }
        Verification::Rejected(r) => println!("rejected: {r}"),
    }

    let bad = parse_blocks("1,2,3|4,5,6|7,8,9|10,11,12", a.len())?;
    if let Verification::Rejected(r) = verify_mat_partition(a, &bad)? {
        println!("{}: {r}", format_blocks(&bad));
    }
    Ok(())
}
