#![allow(dead_code)]

use matfree::arrangement::{Arrangement, Hyperplane};
use matfree::catalog;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn hp(v: &[i64]) -> Hyperplane {
    Hyperplane::from_ints(v).unwrap()
}

pub fn arr(rows: &[&[i64]]) -> Arrangement {
    let dim = rows[0].len();
    Arrangement::new(dim, 1, rows.iter().map(|r| hp(r)).collect()).unwrap()
}

pub fn named(name: &str) -> Arrangement {
    catalog::named(name).unwrap().arrangement().unwrap().clone()
}

/// Random rational arrangement in dimension `dim` with up to `max_len`
/// distinct hyperplanes and integer coefficients in `[-2, 2]`.
pub fn random_arrangement(rng: &mut ChaCha8Rng, dim: usize, max_len: usize) -> Arrangement {
    let target = rng.gen_range(1..=max_len);
    let mut hs: Vec<Hyperplane> = Vec::new();
    let mut attempts = 0;
    while hs.len() < target && attempts < 200 {
        attempts += 1;
        let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2..=2)).collect();
        if let Ok(h) = Hyperplane::from_ints(&v) {
            if !hs.contains(&h) {
                hs.push(h);
            }
        }
    }
    Arrangement::new(dim, 1, hs).unwrap()
}

/// 1-based printed blocks to 0-based.
pub fn blocks(printed: &str) -> Vec<Vec<usize>> {
    printed.split('|').map(|b| b.split(',').map(|i| i.trim().parse::<usize>().unwrap() - 1).collect()).collect()
}
