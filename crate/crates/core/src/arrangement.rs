//! Hyperplanes, arrangements, and the lattice primitives built on them:
//! rank, intersections, localization, restriction and products.
//!
//! Hyperplanes are stored by a normalized defining covector (first nonzero
//! coordinate equal to 1) and subspaces by the RREF of their annihilator,
//! so both compare and hash by value.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Row};
use crate::scalar::{lcm_conductor, CycloScalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    covector: Vec<CycloScalar>,
}

impl Hyperplane {
    /// Normalizes `covector` so its first nonzero entry is 1.
    pub fn new(covector: Vec<CycloScalar>) -> Result<Self> {
        let Some(lead) = covector.iter().find(|c| !c.is_zero()) else {
            return Err(Error::ZeroCovector);
        };
        let n = lead.conductor();
        if let Some(bad) = covector.iter().find(|c| c.conductor() != n) {
            return Err(Error::ConductorMismatch(n, bad.conductor()));
        }
        if lead.is_one() {
            return Ok(Hyperplane { covector });
        }
        let inv = lead.inv()?;
        Ok(Hyperplane { covector: covector.iter().map(|c| c * &inv).collect() })
    }

    /// Hyperplane with rational integer coefficients (conductor 1).
    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| CycloScalar::from_int(c, 1)).collect())
    }

    pub fn covector(&self) -> &[CycloScalar] {
        &self.covector
    }

    pub fn dim(&self) -> usize {
        self.covector.len()
    }

    pub fn conductor(&self) -> u32 {
        self.covector[0].conductor()
    }

    pub fn lift(&self, n: u32) -> Result<Self> {
        let covector = self.covector.iter().map(|c| c.lift(n)).collect::<Result<Vec<_>>>()?;
        Ok(Hyperplane { covector })
    }

    fn padded(&self, left: usize, right: usize, n: u32) -> Result<Self> {
        let mut v = vec![CycloScalar::zero(n); left];
        for c in &self.covector {
            v.push(c.lift(n)?);
        }
        v.extend(std::iter::repeat_with(|| CycloScalar::zero(n)).take(right));
        Ok(Hyperplane { covector: v })
    }

    /// Entries in scalar syntax separated by ` ; `.
    pub fn to_line(&self) -> String {
        self.covector.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ; ")
    }
}

impl fmt::Debug for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^perp", self.covector.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))
    }
}

/// Linear subspace given by the RREF of the forms vanishing on it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    dim: usize,
    annihilator: Vec<Row>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The whole ambient space (codimension 0).
    pub fn whole(dim: usize) -> Self {
        Subspace { dim, annihilator: Vec::new(), pivots: Vec::new() }
    }

    /// Subspace cut out by arbitrary (possibly dependent) forms.
    pub fn from_forms(dim: usize, mut rows: Vec<Row>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: r.len() });
        }
        let pivots = linalg::rref(&mut rows);
        Ok(Subspace { dim, annihilator: rows, pivots })
    }

    pub fn codim(&self) -> usize {
        self.annihilator.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn annihilator(&self) -> &[Row] {
        &self.annihilator
    }

    /// Whether the subspace lies inside the hyperplane.
    pub fn contained_in(&self, h: &Hyperplane) -> bool {
        subspace_in_hyperplane(self, h)
    }

    /// A basis of the subspace itself (vectors on which every form vanishes).
    pub fn basis_vectors(&self, conductor: u32) -> Vec<Row> {
        linalg::null_space(&self.annihilator, &self.pivots, self.dim, conductor)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .annihilator
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ; "))
            .collect();
        write!(f, "Subspace[{}]", rows.join(" | "))
    }
}

/// Sorted, non-decreasing exponents `(d_1, ..., d_l)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct ExponentVector(Vec<usize>);

impl ExponentVector {
    pub fn new(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        ExponentVector(v)
    }

    pub fn zeros(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Largest exponent, 0 for the empty vector.
    pub fn top(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    /// Multiplicity of the largest exponent.
    pub fn top_multiplicity(&self) -> usize {
        let d = self.top();
        self.0.iter().filter(|&&x| x == d).count()
    }

    /// `t = min{i : d_i != 0}` (1-based), or 0 when every exponent is 0.
    pub fn first_nonzero(&self) -> usize {
        self.0.iter().position(|&d| d != 0).map_or(0, |i| i + 1)
    }

    /// Increments the slots `s..=l` (1-based).
    pub fn bump_suffix(&self, s: usize) -> Self {
        let mut v = self.0.clone();
        for d in &mut v[s - 1..] {
            *d += 1;
        }
        ExponentVector::new(v)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl From<ExponentVector> for Vec<usize> {
    fn from(e: ExponentVector) -> Self {
        e.0
    }
}

impl From<Vec<usize>> for ExponentVector {
    fn from(v: Vec<usize>) -> Self {
        ExponentVector::new(v)
    }
}

/// An ordered list of distinct hyperplanes in a common ambient space.
#[derive(Clone, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    conductor: u32,
    hyperplanes: Vec<Hyperplane>,
}

impl fmt::Debug for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Arrangement")
            .field("dim", &self.dim)
            .field("conductor", &self.conductor)
            .field("len", &self.hyperplanes.len())
            .finish()
    }
}

impl Arrangement {
    /// The empty arrangement in dimension `dim`.
    pub fn empty(dim: usize, conductor: u32) -> Self {
        Arrangement { dim, conductor, hyperplanes: Vec::new() }
    }

    /// Builds an arrangement; hyperplanes of a smaller conductor dividing
    /// `conductor` are lifted. Duplicates are rejected.
    pub fn new(dim: usize, conductor: u32, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        let mut seen = std::collections::HashMap::new();
        let mut hs = Vec::with_capacity(hyperplanes.len());
        for (i, h) in hyperplanes.into_iter().enumerate() {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: h.dim() });
            }
            let h = if h.conductor() == conductor { h } else { h.lift(conductor)? };
            if let Some(&first) = seen.get(&h) {
                return Err(Error::DuplicateHyperplane { first: first + 1, second: i + 1 });
            }
            seen.insert(h.clone(), i);
            hs.push(h);
        }
        Ok(Arrangement { dim, conductor, hyperplanes: hs })
    }

    /// Like [`Arrangement::new`] but silently drops repeated hyperplanes.
    pub fn new_dedup(dim: usize, conductor: u32, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for h in hyperplanes {
            let h = if h.conductor() == conductor { h } else { h.lift(conductor)? };
            if seen.insert(h.clone()) {
                kept.push(h);
            }
        }
        Self::new(dim, conductor, kept)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn get(&self, i: usize) -> Result<&Hyperplane> {
        self.hyperplanes.get(i).ok_or(Error::IndexOutOfRange { index: i, len: self.len() })
    }

    pub fn index_of(&self, h: &Hyperplane) -> Option<usize> {
        self.hyperplanes.iter().position(|k| k == h)
    }

    pub fn contains(&self, h: &Hyperplane) -> bool {
        self.index_of(h).is_some()
    }

    /// Sub-arrangement on the given (0-based) indices, in the given order.
    pub fn subarrangement(&self, indices: &[usize]) -> Result<Self> {
        let hs = indices.iter().map(|&i| self.get(i).cloned()).collect::<Result<Vec<_>>>()?;
        Self::new(self.dim, self.conductor, hs)
    }

    /// Appends a hyperplane not yet present.
    pub fn with(&self, h: Hyperplane) -> Result<Self> {
        if self.contains(&h) {
            return Err(Error::HyperplaneInArrangement);
        }
        let mut hs = self.hyperplanes.clone();
        hs.push(h);
        Self::new(self.dim, self.conductor, hs)
    }

    pub fn lift(&self, n: u32) -> Result<Self> {
        let hs = self.hyperplanes.iter().map(|h| h.lift(n)).collect::<Result<Vec<_>>>()?;
        Self::new(self.dim, n, hs)
    }

    /// Set equality of hyperplanes, ignoring order.
    pub fn same_hyperplanes(&self, other: &Arrangement) -> bool {
        if self.dim != other.dim || self.len() != other.len() {
            return false;
        }
        let n = lcm_conductor(self.conductor, other.conductor);
        let (Ok(a), Ok(b)) = (self.lift(n), other.lift(n)) else {
            return false;
        };
        let sa: HashSet<_> = a.hyperplanes.into_iter().collect();
        b.hyperplanes.iter().all(|h| sa.contains(h))
    }

    /// Line-oriented text: `conductor`, `dim`, then one hyperplane per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("conductor {}\ndim {}\n", self.conductor, self.dim);
        for h in &self.hyperplanes {
            s.push_str(&h.to_line());
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with_limit(text, u32::MAX)
    }

    /// Parses the text format, refusing conductors above `conductor_limit`.
    pub fn parse_with_limit(text: &str, conductor_limit: u32) -> Result<Self> {
        let mut conductor: Option<u32> = None;
        let mut dim: Option<usize> = None;
        let mut hs: Vec<Hyperplane> = Vec::new();
        let mut seen = std::collections::HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line: lineno, msg };
            if let Some(rest) = line.strip_prefix("conductor") {
                let n: u32 = rest.trim().parse().map_err(|_| perr(format!("bad conductor {rest:?}")))?;
                if n == 0 {
                    return Err(perr("conductor must be positive".into()));
                }
                if n > conductor_limit {
                    return Err(perr(format!("conductor {n} exceeds limit {conductor_limit}")));
                }
                conductor = Some(n);
                continue;
            }
            if let Some(rest) = line.strip_prefix("dim") {
                dim = Some(rest.trim().parse().map_err(|_| perr(format!("bad dim {rest:?}")))?);
                continue;
            }
            let (Some(n), Some(l)) = (conductor, dim) else {
                return Err(perr("hyperplane before 'conductor' and 'dim' headers".into()));
            };
            let entries: Vec<&str> = line.split(';').map(str::trim).collect();
            if entries.len() != l {
                return Err(perr(format!("expected {l} entries, found {}", entries.len())));
            }
            let cov = entries
                .iter()
                .map(|e| CycloScalar::parse(e, n).map_err(&perr))
                .collect::<Result<Vec<_>>>()?;
            let h = Hyperplane::new(cov).map_err(|e| perr(e.to_string()))?;
            if let Some(&first) = seen.get(&h) {
                return Err(Error::DuplicateHyperplane { first, second: lineno });
            }
            seen.insert(h.clone(), lineno);
            hs.push(h);
        }
        let (Some(n), Some(l)) = (conductor, dim) else {
            return Err(Error::Parse { line: 0, msg: "missing 'conductor' or 'dim' header".into() });
        };
        Ok(Arrangement { dim: l, conductor: n, hyperplanes: hs })
    }
}

fn check_same_space(dim: usize, hs: &[Hyperplane]) -> Result<()> {
    if let Some(h) = hs.iter().find(|h| h.dim() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: h.dim() });
    }
    if let Some(first) = hs.first() {
        let n = first.conductor();
        if let Some(h) = hs.iter().find(|h| h.conductor() != n) {
            return Err(Error::ConductorMismatch(n, h.conductor()));
        }
    }
    Ok(())
}

/// Rank of a set of hyperplanes: codimension of their intersection.
pub fn rank(hs: &[Hyperplane]) -> Result<usize> {
    let Some(first) = hs.first() else { return Ok(0) };
    check_same_space(first.dim(), hs)?;
    let rows: Vec<Row> = hs.iter().map(|h| h.covector.clone()).collect();
    Ok(linalg::rank(&rows))
}

pub fn intersection_subspace(hs: &[Hyperplane]) -> Result<Subspace> {
    let Some(first) = hs.first() else { return Err(Error::EmptyInput) };
    check_same_space(first.dim(), hs)?;
    Subspace::from_forms(first.dim(), hs.iter().map(|h| h.covector.clone()).collect())
}

/// `X ⊆ H` iff the form of `H` is in the row span of the annihilator of `X`.
pub fn subspace_in_hyperplane(x: &Subspace, h: &Hyperplane) -> bool {
    linalg::in_row_span(&x.annihilator, &x.pivots, &h.covector)
}

/// Intersection of two distinct hyperplanes, in canonical form.
pub fn pair_intersection(h: &Hyperplane, k: &Hyperplane) -> Subspace {
    let mut rows = vec![h.covector.clone(), k.covector.clone()];
    let pivots = linalg::rref(&mut rows);
    Subspace { dim: h.dim(), annihilator: rows, pivots }
}

/// Distinct subspaces `H ∩ K` for `K ∈ A`, `K != H`, in first-seen order.
///
/// For `H ∈ A` this is `A^H`; for `H ∉ A` it is `(A ∪ {H})^H`.
pub fn restriction(a: &Arrangement, h: &Hyperplane) -> Result<Vec<Subspace>> {
    if h.dim() != a.dim {
        return Err(Error::DimensionMismatch { expected: a.dim, found: h.dim() });
    }
    if !a.is_empty() && h.conductor() != a.conductor {
        return Err(Error::ConductorMismatch(a.conductor, h.conductor()));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for k in a.hyperplanes.iter().filter(|k| *k != h) {
        let x = pair_intersection(h, k);
        if seen.insert(x.clone()) {
            out.push(x);
        }
    }
    Ok(out)
}

pub fn restriction_size(a: &Arrangement, h: &Hyperplane) -> Result<usize> {
    Ok(restriction(a, h)?.len())
}

/// `A_X`: hyperplanes of `A` containing `X`, in the order of `A`.
pub fn localization(a: &Arrangement, x: &Subspace) -> Arrangement {
    let hs = a.hyperplanes.iter().filter(|h| subspace_in_hyperplane(x, h)).cloned().collect();
    Arrangement { dim: a.dim, conductor: a.conductor, hyperplanes: hs }
}

/// `A1 × A2` in dimension `l1 + l2` over the lcm of the conductors; the
/// hyperplanes of `A1` come first.
pub fn product(a1: &Arrangement, a2: &Arrangement) -> Arrangement {
    let n = lcm_conductor(a1.conductor, a2.conductor);
    let mut hs = Vec::with_capacity(a1.len() + a2.len());
    for h in &a1.hyperplanes {
        hs.push(h.padded(0, a2.dim, n).expect("conductor divides lcm"));
    }
    for h in &a2.hyperplanes {
        hs.push(h.padded(a1.dim, 0, n).expect("conductor divides lcm"));
    }
    Arrangement { dim: a1.dim + a2.dim, conductor: n, hyperplanes: hs }
}

/// `A^H` as an arrangement inside `H`, using the coordinates
/// `x_j - a_j x_p` (`j != p`) where `p` is the pivot of `H`.
pub fn restrict_arrangement(a: &Arrangement, h: &Hyperplane) -> Result<Arrangement> {
    if h.dim() != a.dim {
        return Err(Error::DimensionMismatch { expected: a.dim, found: h.dim() });
    }
    let p = h.covector.iter().position(|c| !c.is_zero()).expect("normalized");
    let n = a.conductor;
    let mut hs = Vec::new();
    for k in a.hyperplanes.iter().filter(|k| *k != h) {
        let kp = &k.covector[p];
        let cov: Vec<CycloScalar> = (0..a.dim)
            .filter(|&j| j != p)
            .map(|j| &k.covector[j] - &(kp * &h.covector[j]))
            .collect();
        hs.push(Hyperplane::new(cov)?);
    }
    Arrangement::new_dedup(a.dim - 1, n, hs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(v: &[i64]) -> Hyperplane {
        Hyperplane::from_ints(v).unwrap()
    }

    fn zeta3(k: u64) -> CycloScalar {
        CycloScalar::zeta_pow(3, k)
    }

    fn example3() -> Arrangement {
        let rows: [[i64; 3]; 10] = [
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 0],
            [1, 2, 0],
            [0, 1, 1],
            [1, 3, 0],
            [1, 1, 1],
            [2, 3, 0],
            [1, 3, 1],
        ];
        Arrangement::new(3, 1, rows.iter().map(|r| hp(r)).collect()).unwrap()
    }

    #[test]
    fn normalization() {
        let h = hp(&[0, 2, 4]);
        assert_eq!(h.covector()[1], CycloScalar::one(1));
        assert_eq!(h, hp(&[0, -1, -2]));
        assert_eq!(Hyperplane::from_ints(&[0, 0]), Err(Error::ZeroCovector));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[]).unwrap(), 0);
        assert_eq!(rank(&[hp(&[1, 0, 0]), hp(&[0, 1, 0]), hp(&[0, 0, 1])]).unwrap(), 3);
        assert_eq!(rank(&example3().hyperplanes).unwrap(), 3);
        assert!(matches!(rank(&[hp(&[1, 0]), hp(&[1, 0, 0])]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn intersection_examples() {
        let x = intersection_subspace(&[hp(&[1, 0, 0])]).unwrap();
        assert_eq!(x.codim(), 1);
        let x = intersection_subspace(&[hp(&[1, 0, 0]), hp(&[1, 1, 0])]).unwrap();
        assert_eq!(x.codim(), 2);
        assert_eq!(x.annihilator(), &[hp(&[1, 0, 0]).covector, hp(&[0, 1, 0]).covector]);
        assert_eq!(intersection_subspace(&[]), Err(Error::EmptyInput));

        // H3 ∩ H8 ⊆ H4 in the ten-hyperplane rational example
        let a = example3();
        let h = |i: usize| a.hyperplanes[i - 1].clone();
        let x38 = intersection_subspace(&[h(3), h(8)]).unwrap();
        assert_eq!(x38, intersection_subspace(&[h(4), h(3)]).unwrap());
        assert!(subspace_in_hyperplane(&x38, &h(4)));
        let loc = localization(&a, &x38);
        for i in [3, 4, 8] {
            assert!(loc.contains(&h(i)));
        }
    }

    #[test]
    fn containment_examples() {
        assert!(!subspace_in_hyperplane(&Subspace::whole(3), &hp(&[1, 2, 3])));
        let x = intersection_subspace(&[hp(&[1, 0, 0]), hp(&[0, 1, 0])]).unwrap();
        assert!(!subspace_in_hyperplane(&x, &hp(&[0, 0, 1])));
        assert!(subspace_in_hyperplane(&x, &hp(&[1, 1, 0])));
    }

    #[test]
    fn restriction_examples() {
        let empty = Arrangement::empty(3, 1);
        assert_eq!(restriction(&empty, &hp(&[1, 0, 0])).unwrap().len(), 0);

        // hand enumeration: H ∩ ker x1 = H ∩ ker x2 = {x1 = x2 = 0}, H ∩ ker x3 distinct
        let coords = Arrangement::new(3, 3, vec![hp(&[1, 0, 0]), hp(&[0, 1, 0]), hp(&[0, 0, 1])]).unwrap();
        let one = CycloScalar::one(3);
        let zero = CycloScalar::zero(3);
        let h = Hyperplane::new(vec![one, -zeta3(1), zero]).unwrap();
        let r = restriction(&coords, &h).unwrap();
        assert_eq!(r.len(), 2);
        let x12 = intersection_subspace(&[coords.hyperplanes[0].clone(), coords.hyperplanes[1].clone()]).unwrap();
        assert!(r.contains(&x12));
    }

    #[test]
    fn localization_trivial_cases() {
        let a = example3();
        // no hyperplane contains the whole space; every one contains the center
        assert!(localization(&a, &Subspace::whole(3)).is_empty());
        let center = intersection_subspace(a.hyperplanes()).unwrap();
        assert_eq!(localization(&a, &center), a);
        let h = a.hyperplanes[4].clone();
        let x = intersection_subspace(std::slice::from_ref(&h)).unwrap();
        assert_eq!(localization(&a, &x).hyperplanes(), &[h]);
    }

    #[test]
    fn product_of_empty_and_sizes() {
        let p = product(&Arrangement::empty(2, 1), &Arrangement::empty(3, 1));
        assert_eq!(p, Arrangement::empty(5, 1));
        let a = example3();
        let p = product(&a, &a);
        assert_eq!(p.len(), 20);
        assert_eq!(p.dim(), 6);
    }

    #[test]
    fn restricted_arrangement_matches_restriction_count() {
        let a = example3();
        for h in a.hyperplanes() {
            let r = restriction(&a, h).unwrap();
            let ra = restrict_arrangement(&a, h).unwrap();
            assert_eq!(r.len(), ra.len());
            assert_eq!(ra.dim(), 2);
        }
    }

    #[test]
    fn text_round_trip() {
        let one = CycloScalar::one(3);
        let zero = CycloScalar::zero(3);
        let h = Hyperplane::new(vec![one.clone(), -zeta3(1), zero.clone()]).unwrap();
        let a = Arrangement::new(3, 3, vec![h, hp(&[0, 1, 0])]).unwrap();
        let text = a.to_text();
        assert!(text.contains("1 ; -z ; 0"));
        assert_eq!(Arrangement::parse(&text).unwrap(), a);
    }

    #[test]
    fn parse_errors() {
        let dup = "conductor 1\ndim 2\n1 ; 0\n# c\n2 ; 0\n";
        assert_eq!(Arrangement::parse(dup), Err(Error::DuplicateHyperplane { first: 3, second: 5 }));
        assert!(matches!(Arrangement::parse("conductor 1\ndim 2\n0 ; 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(Arrangement::parse("conductor 1\ndim 2\n1 ; 0 ; 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(Arrangement::parse("1 ; 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(Arrangement::parse_with_limit("conductor 500\ndim 1\n", 120), Err(Error::Parse { .. })));
        let ok = Arrangement::parse("# header\nconductor 3\ndim 2   # trailing\n\n1 ; z\n").unwrap();
        assert_eq!(ok.len(), 1);
    }
}
