mod common;

use common::named;
use matfree::arrangement::{Arrangement, ExponentVector};
use matfree::catalog::{self, monomial_arrangement, monomial_mat_partition};
use matfree::error::Error;
use matfree::matkernel::{necessary_filter_tabulated, verify_mat_partition};

fn union(a: &Arrangement, b: &Arrangement) -> Arrangement {
    let mut hs = a.hyperplanes().to_vec();
    hs.extend(b.hyperplanes().iter().cloned());
    Arrangement::new_dedup(a.dim(), a.conductor(), hs).unwrap()
}

#[test]
fn weyl_types_match_monomial_family() {
    for n in 2..=5 {
        assert!(named(&format!("B{n}")).same_hyperplanes(&monomial_arrangement(2, 1, n).unwrap()), "B{n}");
    }
    for n in 3..=5 {
        assert!(named(&format!("D{n}")).same_hyperplanes(&monomial_arrangement(2, 2, n).unwrap()), "D{n}");
    }
    for n in 1..=4 {
        let braid = named(&format!("A{n}"));
        let full = monomial_arrangement(1, 1, n + 1).unwrap();
        assert_eq!(braid.len(), full.len() - (n + 1));
        assert!(braid.hyperplanes().iter().all(|h| full.contains(h)), "A{n}");
    }
}

#[test]
fn g26_is_g25_with_g333() {
    let g26 = named("G26");
    let u = union(&named("G25"), &monomial_arrangement(3, 3, 3).unwrap());
    assert_eq!(u.len(), 21);
    assert!(g26.same_hyperplanes(&u));
}

#[test]
fn monomial_partitions_small() {
    for (r, l, e) in [(1, 2, vec![1, 2]), (3, 3, vec![1, 4, 7]), (2, 4, vec![1, 3, 5, 7])] {
        let a = monomial_arrangement(r, 1, l).unwrap();
        let b = monomial_mat_partition(r, l).unwrap();
        let c = verify_mat_partition(&a, &b).unwrap().certified().unwrap();
        assert_eq!(c.exponents, ExponentVector::new(e));
    }
    assert_eq!(monomial_mat_partition(1, 2).unwrap(), vec![vec![0, 1], vec![2]]);
}

#[test]
fn facts_and_filter() {
    let expected = [("G24", 13, 11), ("G27", 29, 25), ("G33", 17, 15), ("G34", 41, 37)];
    for (name, diff, top) in expected {
        let f = catalog::facts(name).unwrap();
        assert_eq!(f.restriction_difference(), Some(diff));
        assert_eq!(f.exponents.top(), top);
        assert!(!necessary_filter_tabulated(&f).unwrap());
    }
    assert!(necessary_filter_tabulated(&catalog::facts("G32").unwrap()).is_err());
    let e = catalog::named("G31").unwrap();
    assert!(e.facts().unwrap().no_free_filtration);
    assert_eq!(e.arrangement(), Err(Error::FactsOnly("G31".into())));
}

#[test]
fn names_resolve() {
    for name in catalog::list() {
        if name.contains('<') || name.contains('(') {
            continue;
        }
        assert!(catalog::named(&name).is_ok(), "{name}");
    }
    assert_eq!(named("G(4,2,3)").len(), 3 + 12);
    assert!(matches!(catalog::named("G(4,3,3)"), Err(Error::InvalidParameters(_))));
    assert!(matches!(catalog::named("Z9"), Err(Error::UnknownName(_))));
}
