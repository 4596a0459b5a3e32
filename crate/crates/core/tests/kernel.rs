mod common;

use common::{blocks, named};
use matfree::arrangement::{restriction_size, Arrangement, ExponentVector};
use matfree::catalog;
use matfree::error::Error;
use matfree::matkernel::{
    block_sizes_from_exponents, check_mat_step, defect, exponents_from_partition, free_filtration, mat_to_mat2,
    necessary_filter, product_partition, split_product_certificate, verify_mat2_blocks, verify_mat2_sequence,
    verify_mat_partition, Condition, Mat2Step, MatCertificate, Verification,
};

fn certify(a: &Arrangement, b: &[Vec<usize>]) -> MatCertificate {
    match verify_mat_partition(a, b).unwrap() {
        Verification::Certified(c) => c,
        Verification::Rejected(r) => panic!("rejected: {r}"),
    }
}

fn exps(v: &[usize]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

#[test]
fn dual_partition_examples() {
    assert_eq!(exponents_from_partition(&[3, 2, 2, 2, 2, 1, 1, 1, 1], 3).unwrap(), exps(&[1, 5, 9]));
    assert_eq!(exponents_from_partition(&[3, 2, 2, 2, 1], 3).unwrap(), exps(&[1, 4, 5]));
    assert_eq!(exponents_from_partition(&[], 3).unwrap(), exps(&[0, 0, 0]));
    assert!(matches!(exponents_from_partition(&[4], 3), Err(Error::BlockSizeOutOfRange { .. })));
    for e in [&[1, 5, 9][..], &[1, 11, 19, 29], &[1, 1, 4, 5, 7, 9], &[0, 1, 2]] {
        let sizes = block_sizes_from_exponents(&exps(e));
        assert_eq!(exponents_from_partition(&sizes, e.len()).unwrap(), exps(e));
    }
}

#[test]
fn only_h9_has_difference_five() {
    let a = named("ex-mat2-not-mat");
    let diffs: Vec<usize> = a.hyperplanes().iter().map(|h| a.len() - restriction_size(&a, h).unwrap()).collect();
    let fives: Vec<usize> = (0..10).filter(|&i| diffs[i] == 5).collect();
    assert_eq!(fives, vec![8]);
}

/// In `A \ {H9}` a member `H` of a size-two fourth block satisfies
/// `|A_4| - |A_4^H| = 4`; only `H3, H6, H8, H10` do, and every pair of them
/// (indeed every pair with the right defects) violates avoidance.
#[test]
fn fourth_block_candidates_fail_avoidance() {
    let a = named("ex-mat2-not-mat");
    let a4_idx: Vec<usize> = (0..10).filter(|&k| k != 8).collect();
    let a4 = a.subarrangement(&a4_idx).unwrap();
    let fours: Vec<usize> = a4_idx
        .iter()
        .copied()
        .filter(|&i| a4.len() - restriction_size(&a4, &a.hyperplanes()[i]).unwrap() == 4)
        .collect();
    assert_eq!(fours, vec![2, 5, 7, 9]);
    let e = exps(&[1, 3, 3]);
    let mut viable = 0;
    for i in 0..10 {
        for j in i + 1..10 {
            if i == 8 || j == 8 {
                continue;
            }
            let rest: Vec<usize> = (0..10).filter(|&k| k != i && k != j && k != 8).collect();
            let aprime = a.subarrangement(&rest).unwrap();
            let pair = [a.hyperplanes()[i].clone(), a.hyperplanes()[j].clone()];
            if pair.iter().any(|h| defect(&aprime, h).unwrap() != 3) {
                continue;
            }
            viable += 1;
            let report = check_mat_step(&aprime, &e, &pair).unwrap();
            assert_eq!(report.failed_condition(), Some(Condition::Avoidance), "pair {i},{j}");
        }
    }
    assert!(viable > 0);
    for (i, j) in [(2, 5), (2, 7), (2, 9), (5, 7), (5, 9), (7, 9)] {
        let rest: Vec<usize> = (0..10).filter(|&k| k != i && k != j && k != 8).collect();
        let aprime = a.subarrangement(&rest).unwrap();
        let pair = [a.hyperplanes()[i].clone(), a.hyperplanes()[j].clone()];
        assert!(!check_mat_step(&aprime, &e, &pair).unwrap().avoidance_ok, "pair {i},{j}");
    }
}

#[test]
fn separating_example_second_variant_steps() {
    let a = named("ex-mat2-not-mat");
    let v = verify_mat2_blocks(&a, &blocks("1,2,3|4|5,6|7,8|9,10")).unwrap();
    let c = v.certified().expect("printed steps certify");
    assert_eq!(c.exponents(), exps(&[1, 4, 5]));
    let trace: Vec<Vec<usize>> = c.trace.iter().map(|e| e.as_slice().to_vec()).collect();
    assert_eq!(trace, vec![vec![1, 1, 1], vec![1, 1, 2], vec![1, 2, 3], vec![1, 3, 4], vec![1, 4, 5]]);
    // the same blocks are not an MAT-partition
    assert!(!verify_mat_partition(&a, &blocks("1,2,3|4|5,6|7,8|9,10")).unwrap().is_certified());
}

#[test]
fn explicit_slot_errors() {
    let a = named("ex-mat2-not-mat");
    let step1 = Mat2Step { s: 1, slotted: vec![(0, 1), (1, 2), (2, 3)] };
    // slots must form the suffix s..=l
    let bad = Mat2Step { s: 2, slotted: vec![(3, 2), (5, 2)] };
    assert!(verify_mat2_sequence(&a, &[step1.clone(), bad]).is_err());
    // s must exceed the first nonzero slot once something is placed
    let full = Mat2Step { s: 1, slotted: vec![(3, 1), (4, 2), (5, 3)] };
    let mut rest: Vec<Mat2Step> = vec![step1, full];
    rest.push(Mat2Step { s: 1, slotted: vec![(6, 1), (7, 2), (8, 3)] });
    rest.push(Mat2Step { s: 3, slotted: vec![(9, 3)] });
    assert!(matches!(verify_mat2_sequence(&a, &rest), Err(Error::SlotStartTooSmall { s: 1, t: 1 })));
}

#[test]
fn built_in_partitions_verify() {
    let expected = [
        ("H3", vec![1, 5, 9]),
        ("G25", vec![1, 4, 7]),
        ("G26", vec![1, 7, 13]),
        ("H4", vec![1, 11, 19, 29]),
        ("ex-product-a2", vec![1, 4, 5]),
        ("A4", vec![0, 1, 2, 3, 4]),
        ("B4", vec![1, 3, 5, 7]),
        ("D4", vec![1, 3, 3, 5]),
        ("E6", vec![1, 4, 5, 7, 8, 11]),
        ("E7", vec![1, 5, 7, 9, 11, 13, 17]),
        ("E8", vec![1, 7, 11, 13, 17, 19, 23, 29]),
    ];
    for (name, e) in expected {
        let entry = catalog::named(name).unwrap();
        let a = entry.arrangement().unwrap();
        let c = certify(a, entry.blocks().unwrap());
        assert_eq!(c.exponents, exps(&e), "{name}");
        assert_eq!(c.exponents.sum(), a.len());
        let sizes: Vec<usize> = c.blocks.iter().map(Vec::len).collect();
        assert_eq!(block_sizes_from_exponents(&c.exponents), sizes);
    }
}

#[test]
fn printed_h3_partition_is_rejected_at_step_three() {
    let a = named("H3");
    let printed = catalog::printed_partition("H3").unwrap();
    let r = verify_mat_partition(&a, &printed).unwrap();
    let rej = r.rejection().expect("printed H3 partition is inconsistent with the printed forms");
    assert_eq!(rej.step, 3);
    assert_eq!(rej.condition, Condition::Defect);
    assert_eq!(rej.reports[2].defects, vec![1, 1]);
    assert_eq!(rej.reports[2].required, vec![2, 2]);
}

#[test]
fn permuting_inside_blocks_keeps_verdict() {
    for name in ["H4", "G26"] {
        let entry = catalog::named(name).unwrap();
        let a = entry.arrangement().unwrap();
        let reversed: Vec<Vec<usize>> = entry.blocks().unwrap().iter().map(|b| b.iter().rev().copied().collect()).collect();
        assert!(verify_mat_partition(a, &reversed).unwrap().is_certified());
    }
    let a = named("ex-mat2-not-mat");
    let wrong = blocks("3,2,1|6,5,4|8,7|9|10");
    let r1 = verify_mat_partition(&a, &wrong).unwrap();
    let r2 = verify_mat_partition(&a, &blocks("1,2,3|4,5,6|7,8|9|10")).unwrap();
    assert_eq!(r1.rejection().unwrap().condition, r2.rejection().unwrap().condition);
}

#[test]
fn prefixes_of_partitions_verify() {
    let entry = catalog::named("G26").unwrap();
    let a = entry.arrangement().unwrap();
    let b = entry.blocks().unwrap();
    for k in 1..=b.len() {
        let placed: Vec<usize> = b[..k].concat();
        let sub = a.subarrangement(&placed).unwrap();
        let mut offset = 0;
        let local: Vec<Vec<usize>> = b[..k]
            .iter()
            .map(|blk| {
                let v = (offset..offset + blk.len()).collect();
                offset += blk.len();
                v
            })
            .collect();
        assert!(verify_mat_partition(&sub, &local).unwrap().is_certified(), "prefix {k}");
    }
}

#[test]
fn certified_arrangements_pass_the_filter() {
    for name in ["H3", "G25", "G26", "H4", "ex-product-a2", "B3", "E6"] {
        let entry = catalog::named(name).unwrap();
        let a = entry.arrangement().unwrap();
        let c = certify(a, entry.blocks().unwrap());
        let o = necessary_filter(a, &c.exponents).unwrap();
        assert!(o.passed(), "{name}");
        let last = *c.blocks.last().unwrap().last().unwrap();
        assert!(o.witnesses().contains(&last), "{name}: last hyperplane is a witness");
    }
    let e = Arrangement::empty(3, 1);
    assert!(!necessary_filter(&e, &exps(&[0, 0, 0])).unwrap().passed());
}

#[test]
fn monomial_filter_negatives() {
    for (r, l) in [(3u32, 3usize), (4, 3), (3, 4)] {
        let a = catalog::monomial_arrangement(r, r, l).unwrap();
        let top = (l - 1) * (r as usize - 1);
        let mut e: Vec<usize> = (0..l - 1).map(|i| i * (r as usize - 1) + 1).collect();
        e.push(top);
        let o = necessary_filter(&a, &ExponentVector::new(e)).unwrap();
        assert!(!o.passed());
        assert!(o.differences.iter().all(|&d| d == (l - 1) * r as usize - 1));
    }
}

#[test]
fn every_mat_certificate_converts_to_second_variant() {
    for name in ["H3", "G25", "G26", "H4", "ex-product-a2", "D4", "E6"] {
        let entry = catalog::named(name).unwrap();
        let c = certify(entry.arrangement().unwrap(), entry.blocks().unwrap());
        let c2 = mat_to_mat2(&c).unwrap().certified().unwrap_or_else(|| panic!("{name}"));
        assert_eq!(c2.exponents(), c.exponents);
    }
}

#[test]
fn product_transport() {
    let e1 = catalog::named("H3").unwrap();
    let e2 = catalog::named("G25").unwrap();
    let c1 = certify(e1.arrangement().unwrap(), e1.blocks().unwrap());
    let c2 = certify(e2.arrangement().unwrap(), e2.blocks().unwrap());
    let p = product_partition(&c1, &c2).unwrap();
    assert_eq!(p.exponents, exps(&[1, 1, 4, 5, 7, 9]));
    let (f1, f2) = split_product_certificate(&p, 3).unwrap();
    assert_eq!(f1.blocks, c1.blocks);
    assert_eq!(f2.blocks, c2.blocks);
    assert_eq!(f1.exponents, c1.exponents);
    assert!(f1.arrangement.same_hyperplanes(&c1.arrangement));
    // empty factor
    let empty = certify(&Arrangement::empty(2, 1), &[]);
    let q = product_partition(&empty, &c2).unwrap();
    assert_eq!(q.exponents, exps(&[0, 0, 1, 4, 7]));
}

#[test]
fn filtration_of_h3() {
    let entry = catalog::named("H3").unwrap();
    let c = certify(entry.arrangement().unwrap(), entry.blocks().unwrap());
    let chain = free_filtration(&c).unwrap();
    assert_eq!(chain.len(), 15);
    assert_eq!(chain[2].exponents, exps(&[1, 1, 1]));
    assert_eq!(chain[0].exponents, exps(&[0, 0, 1]));
    assert_eq!(chain[14].exponents, exps(&[1, 5, 9]));
    for (k, s) in chain.iter().enumerate() {
        assert_eq!(s.exponents.sum(), k + 1);
    }
}

#[test]
fn empty_and_malformed_inputs() {
    let e = Arrangement::empty(3, 1);
    let c = certify(&e, &[]);
    assert_eq!(c.exponents, exps(&[0, 0, 0]));
    let a = named("G25");
    assert!(matches!(verify_mat_partition(&a, &blocks("1,2,3")), Err(Error::NotAPartition(_))));
    assert!(matches!(verify_mat_partition(&a, &[vec![0, 0]]), Err(Error::NotAPartition(_))));
    assert!(matches!(verify_mat_partition(&a, &[vec![40]]), Err(Error::IndexOutOfRange { .. })));
    let h = a.hyperplanes()[0].clone();
    assert_eq!(defect(&a, &h), Err(Error::HyperplaneInArrangement));
}
