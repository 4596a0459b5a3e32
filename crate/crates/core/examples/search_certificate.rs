//! Exhaustive search in both modes, with a JSON certificate.
use matfree::catalog;
use matfree::certfile::{CertificateDoc, Kind};
use matfree::search::{search_mat, search_mat2, Mode, SearchConfig};

fn main() -> matfree::error::Result<()> {
    let a = catalog::named("ex-mat2-not-mat")?.arrangement()?.clone();

    let mat = search_mat(&a, &SearchConfig::new(Mode::Mat))?;
    println!("mat:  {} after {} nodes", mat.verdict, mat.stats.nodes);

    let mut cfg = SearchConfig::new(Mode::Mat2);
    cfg.worker_count = 2;
    let mat2 = search_mat2(&a, &cfg)?;
    println!("mat2: {} exponents {:?}", mat2.verdict, mat2.exponents().map(|e| e.to_string()));

    let doc = CertificateDoc::from_outcome(&mat2, Kind::Mat2, "ex-mat2-not-mat");
    println!("{}", doc.to_json());
    assert!(doc.verify(&a)?.is_certified());
    Ok(())
}
