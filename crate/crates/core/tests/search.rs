mod common;

use common::{arr, named, random_arrangement};
use matfree::arrangement::{Arrangement, ExponentVector, Hyperplane};
use matfree::catalog;
use matfree::error::Error;
use matfree::matkernel::{necessary_filter, verify_mat2_blocks, verify_mat_partition};
use matfree::search::{
    brute_force_oracle, candidates, search_mat, search_mat2, Certificate, Mode, SearchConfig, SearchState, Verdict,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cfg(mode: Mode) -> SearchConfig {
    SearchConfig::new(mode)
}

fn reverifies(a: &Arrangement, c: &Certificate) -> bool {
    match c {
        Certificate::Mat(c) => verify_mat_partition(a, &c.blocks).unwrap().is_certified(),
        Certificate::Mat2(c) => verify_mat2_blocks(a, &c.steps.iter().map(|s| s.indices()).collect::<Vec<_>>())
            .unwrap()
            .is_certified(),
    }
}

#[test]
fn oracle_trivial_cases() {
    let empty = Arrangement::empty(3, 1);
    assert_eq!(brute_force_oracle(&empty, Mode::Mat).unwrap().verdict, Verdict::Certified);
    assert_eq!(search_mat(&empty, &cfg(Mode::Mat)).unwrap().verdict, Verdict::Certified);
    let boolean = arr(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    let o = brute_force_oracle(&boolean, Mode::Mat).unwrap();
    assert_eq!(o.exponents(), Some(ExponentVector::new(vec![1, 1, 1])));
    let big = named("G25");
    assert!(matches!(brute_force_oracle(&big, Mode::Mat), Err(Error::CapacityExceeded { .. })));
}

#[test]
fn oracle_agrees_on_small_random_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..40 {
        let a = random_arrangement(&mut rng, 3, 6);
        for mode in [Mode::Mat, Mode::Mat2] {
            let s = match mode {
                Mode::Mat => search_mat(&a, &cfg(mode)).unwrap(),
                Mode::Mat2 => search_mat2(&a, &cfg(mode)).unwrap(),
            };
            let o = brute_force_oracle(&a, mode).unwrap();
            assert_eq!(s.verdict, o.verdict, "{mode:?} {a:?}");
            if let Some(c) = &s.certificate {
                assert!(reverifies(&a, c));
                assert_eq!(Some(c.exponents()), o.exponents());
            }
        }
    }
}

#[test]
fn memoization_does_not_change_verdicts() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut corpus: Vec<Arrangement> = (0..40).map(|_| random_arrangement(&mut rng, 3, 9)).collect();
    corpus.push(named("ex-mat2-not-mat"));
    corpus.push(named("G(3,3,3)"));
    for a in &corpus {
        for mode in [Mode::Mat, Mode::Mat2] {
            let on = cfg(mode);
            let off = SearchConfig { memoization: false, ..cfg(mode) };
            let (x, y) = match mode {
                Mode::Mat => (search_mat(a, &on).unwrap(), search_mat(a, &off).unwrap()),
                Mode::Mat2 => (search_mat2(a, &on).unwrap(), search_mat2(a, &off).unwrap()),
            };
            assert_eq!(x.verdict, y.verdict);
            assert_eq!(x.certificate, y.certificate);
            assert_eq!(y.stats.memo_hits, 0);
        }
    }
}

#[test]
fn deterministic_and_thread_independent() {
    for name in ["G26", "H3", "ex-mat2-not-mat", "G(3,3,3)", "D4"] {
        let a = named(name);
        for mode in [Mode::Mat, Mode::Mat2] {
            let run = |threads: usize| {
                let c = SearchConfig { worker_count: threads, ..cfg(mode) };
                match mode {
                    Mode::Mat => search_mat(&a, &c).unwrap(),
                    Mode::Mat2 => search_mat2(&a, &c).unwrap(),
                }
            };
            let first = run(1);
            assert_eq!(first.certificate, run(1).certificate, "{name}");
            let par = run(4);
            assert_eq!(first.verdict, par.verdict, "{name}");
            assert_eq!(first.certificate, par.certificate, "{name} {mode:?}");
        }
    }
}

#[test]
fn rank_two_arrangements_are_certified() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let a = random_arrangement(&mut rng, 2, 8);
        let o = search_mat(&a, &cfg(Mode::Mat)).unwrap();
        assert_eq!(o.verdict, Verdict::Certified);
        let e = o.exponents().unwrap();
        if a.len() >= 2 {
            assert_eq!(e.as_slice(), &[1, a.len() - 1]);
        }
    }
}

#[test]
fn catalog_verdicts() {
    let g25 = search_mat(&named("G25"), &cfg(Mode::Mat)).unwrap();
    assert_eq!(g25.exponents(), Some(ExponentVector::new(vec![1, 4, 7])));
    let ex = named("ex-mat2-not-mat");
    assert_eq!(search_mat(&ex, &cfg(Mode::Mat)).unwrap().verdict, Verdict::ExhaustedNone);
    let m2 = search_mat2(&ex, &cfg(Mode::Mat2)).unwrap();
    assert_eq!(m2.exponents(), Some(ExponentVector::new(vec![1, 4, 5])));
    let g333 = named("G(3,3,3)");
    assert_eq!(search_mat2(&g333, &cfg(Mode::Mat2)).unwrap().verdict, Verdict::ExhaustedNone);
}

/// Exhaustion by search agrees with the filter: when the filter fails for
/// the tabulated exponents, no step sequence exists.
#[test]
fn filter_failure_implies_exhaustion() {
    for (r, l) in [(3u32, 3usize), (4, 3), (5, 3)] {
        let a = catalog::monomial_arrangement(r, r, l).unwrap();
        let mut e: Vec<usize> = (0..l).map(|i| i * (r as usize - 1) + 1).collect();
        e[l - 1] = (l - 1) * (r as usize - 1);
        assert!(!necessary_filter(&a, &ExponentVector::new(e)).unwrap().passed());
        assert_eq!(search_mat2(&a, &cfg(Mode::Mat2)).unwrap().verdict, Verdict::ExhaustedNone, "G({r},{r},{l})");
    }
}

#[test]
fn candidate_sets() {
    let a = named("ex-mat2-not-mat");
    let empty = SearchState::empty(3);
    assert_eq!(candidates(&a, &empty, Mode::Mat).unwrap(), (0..10).collect::<Vec<_>>());
    // after the first four blocks of the step sequence, only H9, H10 remain
    let state = SearchState::from_blocks(3, &[vec![0, 1, 2], vec![3], vec![4, 5], vec![6, 7]]).unwrap();
    let c = candidates(&a, &state, Mode::Mat).unwrap();
    assert!(c.iter().all(|i| [8, 9].contains(i)));
    // everything placed except H9: MAT mode at the fifth block wants defect 4
    let mut placed = SearchState::from_blocks(3, &[vec![0, 1, 2], vec![3, 4], vec![5, 6], vec![7, 9]]).unwrap();
    assert_eq!(placed.exponents.as_slice(), &[1, 4, 4]);
    assert_eq!(candidates(&a, &placed, Mode::Mat).unwrap(), vec![8]);
    placed.exponents = ExponentVector::new(vec![1, 3, 5]);
    assert!(candidates(&a, &placed, Mode::Mat).unwrap().is_empty());
}

#[test]
fn first_block_restriction_is_reported() {
    let a = named("G25");
    let printed = catalog::named("G25").unwrap().blocks().unwrap()[0].clone();
    let c = SearchConfig { first_block_restriction: Some(vec![printed.clone()]), ..cfg(Mode::Mat) };
    let o = search_mat(&a, &c).unwrap();
    assert!(o.restriction_in_force);
    assert_eq!(o.verdict, Verdict::Certified);
    let mut sorted = printed.clone();
    sorted.sort_unstable();
    assert_eq!(o.certificate.unwrap().blocks()[0], sorted);
    // a dependent first block leaves nothing to explore
    let bad = SearchConfig { first_block_restriction: Some(vec![vec![0, 1, 2, 3]]), ..cfg(Mode::Mat) };
    assert_eq!(search_mat(&a, &bad).unwrap().verdict, Verdict::ExhaustedNone);
}

#[test]
fn budget_is_not_a_verdict() {
    let a = named("H4");
    let c = SearchConfig { node_budget: 50, ..cfg(Mode::Mat) };
    let o = search_mat(&a, &c).unwrap();
    assert_eq!(o.verdict, Verdict::BudgetExceeded);
    assert!(o.certificate.is_none());
    let zero = SearchConfig { node_budget: 0, ..cfg(Mode::Mat) };
    assert!(search_mat(&a, &zero).is_err());
}

#[test]
fn capacity_is_enforced() {
    let hs: Vec<Hyperplane> = (1..=130).map(|k| Hyperplane::from_ints(&[1, k]).unwrap()).collect();
    let a = Arrangement::new(2, 1, hs).unwrap();
    assert!(matches!(search_mat(&a, &cfg(Mode::Mat)), Err(Error::CapacityExceeded { len: 130, .. })));
}
