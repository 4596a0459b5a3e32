//! The restriction-size necessary condition, on forms and on tabulated data.
use matfree::arrangement::ExponentVector;
use matfree::catalog;
use matfree::matkernel::{necessary_filter, necessary_filter_tabulated};

fn main() -> matfree::error::Result<()> {
    let h3 = catalog::named("H3")?;
    let f = necessary_filter(h3.arrangement()?, &ExponentVector::new(vec![1, 5, 9]))?;
    println!("H3: {:?}, witnesses {:?}", f.status, f.witnesses());

    let g333 = catalog::monomial_arrangement(3, 3, 3)?;
    let f = necessary_filter(&g333, &ExponentVector::new(vec![1, 4, 4]))?;
    println!("G(3,3,3): passed = {}, differences {:?}", f.passed(), f.differences);

    for name in ["G24", "G27", "G33", "G34"] {
        let facts = catalog::facts(name)?;
        println!(
            "{name}: |A| - |A^H| = {:?}, top exponent {}, passes = {}",
            facts.restriction_difference(),
            facts.exponents.top(),
            necessary_filter_tabulated(&facts)?
        );
    }
    Ok(())
}
