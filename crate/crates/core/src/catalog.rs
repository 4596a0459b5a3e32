//! Built-in arrangements with their known partitions, the monomial
//! (imprimitive) family, Weyl arrangements, and tabulated invariants for
//! reflection arrangements whose coordinates are not built in.
//!
//! Explicit coordinate lists keep their published order, so 1-based block
//! indices below match the printed partitions exactly.

use std::collections::HashMap;

use crate::arrangement::{Arrangement, ExponentVector, Hyperplane};
use crate::error::{Error, Result};
use crate::matkernel::FactsRecord;
use crate::scalar::{make_scalar, CycloScalar, ScalarSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Forms {
        arrangement: Arrangement,
        /// Known MAT-partition, 0-based.
        blocks: Option<Vec<Vec<usize>>>,
        /// Known MAT2 step sequence (as blocks; slots are assigned
        /// canonically), 0-based.
        mat2_blocks: Option<Vec<Vec<usize>>>,
    },
    Facts(FactsRecord),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub payload: Payload,
    pub provenance: String,
}

impl CatalogEntry {
    pub fn arrangement(&self) -> Result<&Arrangement> {
        match &self.payload {
            Payload::Forms { arrangement, .. } => Ok(arrangement),
            Payload::Facts(_) => Err(Error::FactsOnly(self.name.clone())),
        }
    }

    pub fn blocks(&self) -> Option<&[Vec<usize>]> {
        match &self.payload {
            Payload::Forms { blocks, .. } => blocks.as_deref(),
            Payload::Facts(_) => None,
        }
    }

    pub fn mat2_blocks(&self) -> Option<&[Vec<usize>]> {
        match &self.payload {
            Payload::Forms { mat2_blocks, .. } => mat2_blocks.as_deref(),
            Payload::Facts(_) => None,
        }
    }

    pub fn facts(&self) -> Option<&FactsRecord> {
        match &self.payload {
            Payload::Facts(f) => Some(f),
            Payload::Forms { .. } => None,
        }
    }
}

const FACTS_NAMES: [&str; 7] = ["G24", "G27", "G29", "G31", "G32", "G33", "G34"];

/// Names accepted by [`named`], with parametrized families shown as patterns.
pub fn list() -> Vec<String> {
    let mut v: Vec<String> = ["H3", "H4", "G25", "G26", "ex-mat2-not-mat", "ex-product-a2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    v.extend(["A<n>", "B<n>", "D<n>", "E6", "E7", "E8", "G(r,e,l)"].iter().map(|s| s.to_string()));
    v.extend(FACTS_NAMES.iter().map(|s| s.to_string()));
    v
}

/// 1-based printed partition to 0-based blocks.
fn blocks_from(printed: &str) -> Vec<Vec<usize>> {
    printed
        .split('|')
        .map(|b| b.split(',').map(|i| i.trim().parse::<usize>().expect("static data") - 1).collect())
        .collect()
}

/// Builds forms from tokens over a fixed conductor. Tokens: integers,
/// `t` (golden ratio), `s` (its reciprocal), `w`/`w2` (cube roots of
/// unity), each optionally prefixed by `-`.
fn forms(conductor: u32, dim: usize, rows: &[&str]) -> Arrangement {
    let token = |tok: &str| -> CycloScalar {
        let (neg, body) = match tok.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, tok),
        };
        let v = match body {
            "t" => make_scalar(ScalarSpec::GoldenRatio).unwrap().lift(conductor).unwrap(),
            "s" => make_scalar(ScalarSpec::GoldenRatioReciprocal).unwrap().lift(conductor).unwrap(),
            "w" => CycloScalar::zeta_pow(3, 1).lift(conductor).unwrap(),
            "w2" => CycloScalar::zeta_pow(3, 2).lift(conductor).unwrap(),
            n => CycloScalar::from_int(n.parse().expect("static data"), conductor),
        };
        if neg {
            -v
        } else {
            v
        }
    };
    let hs = rows
        .iter()
        .map(|r| Hyperplane::new(r.split_whitespace().map(token).collect()).expect("static data"))
        .collect();
    Arrangement::new(dim, conductor, hs).expect("static data")
}

const H3_FORMS: [&str; 15] = [
    "1 0 0", "0 1 0", "0 0 1", "1 t s", "s 1 t", "t s 1", "1 -t s", "s 1 -t", "-t s 1", "1 t -s", "-s 1 t",
    "t -s 1", "1 -t -s", "-s 1 -t", "-t -s 1",
];
/// Partition published alongside the H3 forms. It does not verify against
/// them (step 3 has defects 1, 1 where 2 is required); see
/// [`printed_partition`].
const H3_PRINTED_PARTITION: &str = "13,14,15|10,12|5,6|4,11|8,9|7|3|2|1";
/// Verified replacement sharing the first two printed blocks.
const H3_PARTITION: &str = "13,14,15|10,12|2,8|1,5|4,9|7|3|11|6";

const H4_FORMS: [&str; 60] = [
    "1 0 0 0", "0 1 0 0", "0 0 1 0", "0 0 0 1", "1 t s 0",
    "1 0 t s", "1 s 0 t", "t 1 0 s", "s 1 t 0", "0 1 s t",
    "t s 1 0", "0 t 1 s", "s 0 1 t", "t 0 s 1", "s t 0 1",
    "0 s t 1", "-1 t s 0", "1 -t s 0", "1 t -s 0", "-1 0 t s",
    "1 0 -t s", "1 0 t -s", "-1 s 0 t", "1 -s 0 t", "1 s 0 -t",
    "-t 1 0 s", "t -1 0 s", "t 1 0 -s", "-s 1 t 0", "s -1 t 0",
    "s 1 -t 0", "0 -1 s t", "0 1 -s t", "0 1 s -t", "-t s 1 0",
    "t -s 1 0", "t s -1 0", "0 -t 1 s", "0 t -1 s", "0 t 1 -s",
    "-s 0 1 t", "s 0 -1 t", "s 0 1 -t", "-t 0 s 1", "t 0 -s 1",
    "t 0 s -1", "-s t 0 1", "s -t 0 1", "s t 0 -1", "0 -s t 1",
    "0 s -t 1", "0 s t -1", "1 1 1 1", "-1 1 1 1", "1 -1 1 1",
    "1 1 -1 1", "1 1 1 -1", "-1 -1 1 1", "-1 1 -1 1", "-1 1 1 -1",
];
const H4_PARTITION: &str = "31,43,48,54|29,38,51|23,34,58|18,20,25|17,59,60|21,47,52|39,41,44|26,32,49|\
30,35,40|2,3,42|33,46,50|4,37|27,57|19,24|55,56|10,22|12,45|16,28|15,36|53|14|13|11|9|8|7|6|5|1";

const G25_FORMS: [&str; 12] = [
    "1 0 0", "0 1 0", "0 0 1", "1 1 1", "1 1 w", "1 1 w2", "1 w 1", "1 w w", "1 w w2", "1 w2 1", "1 w2 w",
    "1 w2 w2",
];
const G25_PARTITION: &str = "7,4,3|8,5|9,6|2,1|10|11|12";

const G26_EXTRA: [&str; 9] =
    ["1 -w 0", "1 -w2 0", "1 -1 0", "1 0 -w", "1 0 -w2", "1 0 -1", "0 1 -w", "0 1 -w2", "0 1 -1"];
const G26_PARTITION: &str = "12,19,20|16,18|13,15|17,21|10,14|6,11|8,9|7|5|4|3|2|1";

const EX_MAT2_FORMS: [&str; 10] =
    ["1 0 0", "0 1 0", "0 0 1", "1 1 0", "1 2 0", "0 1 1", "1 3 0", "1 1 1", "2 3 0", "1 3 1"];
const EX_MAT2_STEPS: &str = "1,2,3|4|5,6|7,8|9,10";

const EX_PRODUCT_A2_FORMS: [&str; 10] =
    ["1 0 0", "0 1 0", "0 0 1", "1 -w 0", "1 0 -w", "1 -w2 0", "1 0 -w2", "1 -1 0", "1 0 -1", "0 1 -w"];
const EX_PRODUCT_A2_PARTITION: &str = "1,2,3|4,5|6,7|8,9|10";

/// Partition exactly as published for a built-in entry (0-based). Differs
/// from [`CatalogEntry::blocks`] only for H3, whose published partition is
/// inconsistent with its published forms.
pub fn printed_partition(name: &str) -> Option<Vec<Vec<usize>>> {
    match name {
        "H3" => Some(blocks_from(H3_PRINTED_PARTITION)),
        "H4" => Some(blocks_from(H4_PARTITION)),
        "G25" => Some(blocks_from(G25_PARTITION)),
        "G26" => Some(blocks_from(G26_PARTITION)),
        "ex-product-a2" => Some(blocks_from(EX_PRODUCT_A2_PARTITION)),
        "ex-mat2-not-mat" => Some(blocks_from(EX_MAT2_STEPS)),
        _ => None,
    }
}

fn forms_entry(
    name: &str,
    arrangement: Arrangement,
    blocks: Option<&str>,
    mat2: Option<&str>,
    provenance: &str,
) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        payload: Payload::Forms { arrangement, blocks: blocks.map(blocks_from), mat2_blocks: mat2.map(blocks_from) },
        provenance: provenance.to_string(),
    }
}

/// `A(G(r,e,l))`: the forms `x_i - z^k x_j` (`i < j`, `1 <= k <= r`) over
/// conductor `r`, preceded by the coordinate hyperplanes `x_1..x_l` unless
/// `e = r >= 2`.
pub fn monomial_arrangement(r: u32, e: u32, l: usize) -> Result<Arrangement> {
    if r == 0 || e == 0 || !r.is_multiple_of(e) {
        return Err(Error::InvalidParameters(format!("e = {e} must divide r = {r}")));
    }
    if l == 0 {
        return Err(Error::InvalidParameters("l must be positive".into()));
    }
    let zero = CycloScalar::zero(r);
    let one = CycloScalar::one(r);
    let mut hs = Vec::new();
    if e < r || e == 1 {
        for i in 0..l {
            let mut v = vec![zero.clone(); l];
            v[i] = one.clone();
            hs.push(Hyperplane::new(v)?);
        }
    }
    for i in 0..l {
        for j in i + 1..l {
            for k in 1..=r {
                let mut v = vec![zero.clone(); l];
                v[i] = one.clone();
                v[j] = -CycloScalar::zeta_pow(r, k as u64);
                hs.push(Hyperplane::new(v)?);
            }
        }
    }
    Arrangement::new(l, r, hs)
}

/// The partition `(pi_11 | pi_21 | ... | pi_2r | ... | pi_lr)` of
/// `A(G(r,1,l))`: first all coordinate hyperplanes, then for `2 <= i <= l`
/// and `1 <= j <= r` the block `{x_{i-1} - z^j x_k : i <= k <= l}`.
/// Indices refer to [`monomial_arrangement`]`(r, 1, l)`.
pub fn monomial_mat_partition(r: u32, l: usize) -> Result<Vec<Vec<usize>>> {
    let a = monomial_arrangement(r, 1, l)?;
    let index: HashMap<&Hyperplane, usize> = a.hyperplanes().iter().enumerate().map(|(i, h)| (h, i)).collect();
    let zero = CycloScalar::zero(r);
    let one = CycloScalar::one(r);
    let mut blocks = vec![(0..l).collect::<Vec<_>>()];
    for i in 2..=l {
        for j in 1..=r {
            let block = (i..=l)
                .map(|k| {
                    let mut v = vec![zero.clone(); l];
                    v[i - 2] = one.clone();
                    v[k - 1] = -CycloScalar::zeta_pow(r, j as u64);
                    index[&Hyperplane::new(v).expect("nonzero")]
                })
                .collect();
            blocks.push(block);
        }
    }
    Ok(blocks)
}

/// Positive roots from simple roots given in some coordinates, with their
/// heights. The Cartan integers come from the Gram matrix.
fn positive_roots(gram: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = gram.len();
    // <beta, alpha_i^vee> = 2 (beta, alpha_i) / (alpha_i, alpha_i)
    let pairing = |beta: &[i64], i: usize| -> i64 {
        let ip: i64 = (0..n).map(|j| beta[j] * gram[j][i]).sum();
        2 * ip / gram[i][i]
    };
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pairing(beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        frontier = next;
    }
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
    roots
}

/// Weyl arrangement: hyperplanes orthogonal to the positive roots, with the
/// partition of roots by height as built-in blocks.
fn weyl(simple: &[Vec<i64>], gram: Vec<Vec<i64>>) -> (Arrangement, Vec<Vec<usize>>) {
    let dim = simple[0].len();
    let roots = positive_roots(&gram);
    let mut hs = Vec::with_capacity(roots.len());
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (idx, r) in roots.iter().enumerate() {
        let coords: Vec<i64> = (0..dim).map(|c| (0..r.len()).map(|i| r[i] * simple[i][c]).sum()).collect();
        hs.push(Hyperplane::from_ints(&coords).expect("root is nonzero"));
        let height = r.iter().sum::<i64>() as usize;
        if blocks.len() < height {
            blocks.push(Vec::new());
        }
        blocks[height - 1].push(idx);
    }
    (Arrangement::new(dim, 1, hs).expect("distinct roots"), blocks)
}

fn gram_of(simple: &[Vec<i64>]) -> Vec<Vec<i64>> {
    simple.iter().map(|a| simple.iter().map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum()).collect()).collect()
}

fn unit(dim: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

fn diff(dim: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = unit(dim, i);
    v[j] -= 1;
    v
}

/// Weyl arrangement of type `A_n`, `B_n`, `D_n` (standard coordinates) or
/// `E_6`, `E_7`, `E_8` (coordinates dual to the simple roots), with the
/// height partition of the positive roots.
pub fn weyl_arrangement(kind: char, n: usize) -> Result<(Arrangement, Vec<Vec<usize>>)> {
    let bad = || Error::InvalidParameters(format!("no Weyl type {kind}{n}"));
    match kind {
        'A' if n >= 1 => {
            let simple: Vec<_> = (0..n).map(|i| diff(n + 1, i, i + 1)).collect();
            Ok(weyl(&simple, gram_of(&simple)))
        }
        'B' if n >= 2 => {
            let mut simple: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            simple.push(unit(n, n - 1));
            Ok(weyl(&simple, gram_of(&simple)))
        }
        'D' if n >= 3 => {
            let mut simple: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = unit(n, n - 2);
            last[n - 1] = 1;
            simple.push(last);
            Ok(weyl(&simple, gram_of(&simple)))
        }
        'E' if (6..=8).contains(&n) => {
            // Bourbaki labels: 1-3-4-5-6-7-8 chain, 2 attached to 4
            let mut edges = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
            if n >= 7 {
                edges.push((6, 7));
            }
            if n == 8 {
                edges.push((7, 8));
            }
            let mut gram = vec![vec![0i64; n]; n];
            for (i, row) in gram.iter_mut().enumerate() {
                row[i] = 2;
            }
            for (a, b) in edges {
                gram[a - 1][b - 1] = -1;
                gram[b - 1][a - 1] = -1;
            }
            let simple: Vec<_> = (0..n).map(|i| unit(n, i)).collect();
            Ok(weyl(&simple, gram))
        }
        _ => Err(bad()),
    }
}

fn parse_monomial_name(name: &str) -> Option<(u32, u32, usize)> {
    let inner = name.strip_prefix("G(")?.strip_suffix(')')?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return None;
    }
    Some((parts[0].parse().ok()?, parts[1].parse().ok()?, parts[2].parse().ok()?))
}

/// Looks up a built-in arrangement or facts record by name.
pub fn named(name: &str) -> Result<CatalogEntry> {
    match name {
        "H3" => Ok(forms_entry("H3", forms(5, 3, &H3_FORMS), Some(H3_PARTITION), None, "reflection arrangement of H3 (G23)")),
        "H4" => Ok(forms_entry("H4", forms(5, 4, &H4_FORMS), Some(H4_PARTITION), None, "reflection arrangement of H4 (G30)")),
        "G25" => Ok(forms_entry("G25", forms(3, 3, &G25_FORMS), Some(G25_PARTITION), None, "reflection arrangement of G25")),
        "G26" => {
            let rows: Vec<&str> = G25_FORMS.iter().chain(G26_EXTRA.iter()).copied().collect();
            Ok(forms_entry(
                "G26",
                forms(3, 3, &rows),
                Some(G26_PARTITION),
                None,
                "reflection arrangement of G26: G25 together with G(3,3,3)",
            ))
        }
        "ex-mat2-not-mat" => Ok(forms_entry(
            "ex-mat2-not-mat",
            forms(1, 3, &EX_MAT2_FORMS),
            None,
            Some(EX_MAT2_STEPS),
            "rational arrangement with exponents (1,4,5) that is MAT2-free but not MAT-free",
        )),
        "ex-product-a2" => Ok(forms_entry(
            "ex-product-a2",
            forms(3, 3, &EX_PRODUCT_A2_FORMS),
            Some(EX_PRODUCT_A2_PARTITION),
            None,
            "second factor of the product showing MAT2-freeness is not closed under products",
        )),
        _ => {
            if FACTS_NAMES.contains(&name) {
                return Ok(CatalogEntry {
                    name: name.to_string(),
                    payload: Payload::Facts(facts(name)?),
                    provenance: "tabulated invariants; no defining forms built in".into(),
                });
            }
            if let Some((r, e, l)) = parse_monomial_name(name) {
                let arrangement = monomial_arrangement(r, e, l)?;
                let blocks = if e == 1 { Some(monomial_mat_partition(r, l)?) } else { None };
                return Ok(CatalogEntry {
                    name: name.to_string(),
                    payload: Payload::Forms { arrangement, blocks, mat2_blocks: None },
                    provenance: "monomial arrangement of the imprimitive group".into(),
                });
            }
            let mut chars = name.chars();
            let kind = chars.next().ok_or_else(|| Error::UnknownName(name.into()))?;
            let rank: usize = chars.as_str().parse().map_err(|_| Error::UnknownName(name.into()))?;
            if !"ABDE".contains(kind) {
                return Err(Error::UnknownName(name.into()));
            }
            let (arrangement, blocks) = weyl_arrangement(kind, rank).map_err(|_| Error::UnknownName(name.into()))?;
            Ok(CatalogEntry {
                name: name.to_string(),
                payload: Payload::Forms { arrangement, blocks: Some(blocks), mat2_blocks: None },
                provenance: "Weyl arrangement; built-in blocks group positive roots by height".into(),
            })
        }
    }
}

fn record(name: &str, exps: &[usize], restriction_size: Option<usize>, no_ff: bool, note: Option<&str>) -> FactsRecord {
    FactsRecord {
        name: name.to_string(),
        size: exps.iter().sum(),
        exponents: ExponentVector::new(exps.to_vec()),
        restriction_size,
        no_free_filtration: no_ff,
        note: note.map(str::to_string),
    }
}

/// Tabulated invariants of exceptional reflection arrangements without
/// built-in coordinates. `|A|` is the sum of the exponents.
pub fn facts(name: &str) -> Result<FactsRecord> {
    Ok(match name {
        "G24" => record("G24", &[1, 9, 11], Some(21 - 13), false, None),
        "G27" => record("G27", &[1, 19, 25], Some(45 - 29), false, None),
        "G29" => record("G29", &[1, 9, 13, 17], None, true, Some("has no free filtration")),
        "G31" => record("G31", &[1, 13, 17, 29], None, true, Some("has no free filtration")),
        "G32" => record(
            "G32",
            &[1, 7, 13, 19],
            None,
            false,
            Some("up to lattice symmetry there are 9 different choices of a basis; none extends to an MAT-partition"),
        ),
        "G33" => record("G33", &[1, 7, 9, 13, 15], Some(45 - 17), false, None),
        "G34" => record("G34", &[1, 13, 19, 25, 31, 37], Some(126 - 41), false, None),
        _ => return Err(Error::UnknownName(name.into())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_arrangement(1, 1, 2).unwrap().len(), 3);
        assert_eq!(monomial_arrangement(3, 1, 3).unwrap().len(), 12);
        assert_eq!(monomial_arrangement(3, 3, 3).unwrap().len(), 9);
        for r in 2..=5 {
            for l in 2..=4 {
                assert_eq!(monomial_arrangement(r, 1, l).unwrap().len(), l + r as usize * l * (l - 1) / 2);
                assert_eq!(monomial_arrangement(r, r, l).unwrap().len(), r as usize * l * (l - 1) / 2);
            }
        }
        assert!(monomial_arrangement(3, 2, 3).is_err());
    }

    #[test]
    fn monomial_partition_shape() {
        let b = monomial_mat_partition(1, 2).unwrap();
        assert_eq!(b, vec![vec![0, 1], vec![2]]);
        let b = monomial_mat_partition(3, 3).unwrap();
        let sizes: Vec<usize> = b.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 2, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn named_sizes() {
        let sizes = [("H3", 15), ("H4", 60), ("G25", 12), ("G26", 21), ("ex-mat2-not-mat", 10), ("ex-product-a2", 10)];
        for (name, n) in sizes {
            assert_eq!(named(name).unwrap().arrangement().unwrap().len(), n, "{name}");
        }
        assert_eq!(named("H3").unwrap().blocks().unwrap()[0], vec![12, 13, 14]);
        assert_eq!(printed_partition("H3").unwrap()[2], vec![4, 5]);
        assert_eq!(named("H4").unwrap().blocks().unwrap().len(), 29);
        assert_eq!(named("H4").unwrap().blocks().unwrap()[0], vec![30, 42, 47, 53]);
    }

    #[test]
    fn weyl_counts() {
        let counts = [("A3", 6), ("A4", 10), ("B3", 9), ("B4", 16), ("D4", 12), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120)];
        for (name, n) in counts {
            let e = named(name).unwrap();
            assert_eq!(e.arrangement().unwrap().len(), n, "{name}");
            let blocks = e.blocks().unwrap();
            assert_eq!(blocks.iter().map(Vec::len).sum::<usize>(), n);
        }
        // Coxeter number = number of heights
        assert_eq!(named("E8").unwrap().blocks().unwrap().len(), 29);
        assert_eq!(named("E6").unwrap().blocks().unwrap().len(), 11);
    }

    #[test]
    fn unknown_names() {
        assert_eq!(named("G99"), Err(Error::UnknownName("G99".into())));
        assert!(named("E9").is_err());
        assert!(named("").is_err());
        assert!(facts("H3").is_err());
        assert_eq!(named("G24").unwrap().arrangement(), Err(Error::FactsOnly("G24".into())));
    }

    #[test]
    fn facts_records() {
        let g24 = facts("G24").unwrap();
        assert_eq!(g24.exponents.as_slice(), &[1, 9, 11]);
        assert_eq!(g24.restriction_difference(), Some(13));
        let g34 = facts("G34").unwrap();
        assert_eq!(g34.exponents.as_slice(), &[1, 13, 19, 25, 31, 37]);
        assert_eq!(g34.restriction_difference(), Some(41));
        assert!(facts("G31").unwrap().no_free_filtration);
        assert!(facts("G29").unwrap().no_free_filtration);
        assert!(facts("G32").unwrap().note.unwrap().contains("9 different choices of a basis"));
    }
}
