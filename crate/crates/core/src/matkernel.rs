//! Step verification for the Multiple Addition Theorem and its second
//! variant, partition and step-sequence verification, the restriction-size
//! necessary condition, free filtrations, and transport of partitions
//! across products.
//!
//! Exponents are never derived from derivation modules. They are pure
//! bookkeeping: each verified step updates them as the theorems dictate,
//! starting from `(0, ..., 0)` for the empty arrangement.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrangement::{
    intersection_subspace, product, rank, restriction_size, subspace_in_hyperplane, Arrangement,
    ExponentVector, Hyperplane,
};
use crate::error::{Error, Result};
use crate::scalar::CycloScalar;

/// One of the conditions checked for a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// (1) the added hyperplanes are independent.
    Codimension,
    /// (2) their intersection lies in no hyperplane already present.
    Avoidance,
    /// (3) every added hyperplane has the prescribed defect.
    Defect,
    /// `q <= p`: no more hyperplanes than the multiplicity of the top exponent.
    Multiplicity,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Codimension => "condition (1): intersection is not of full codimension",
            Condition::Avoidance => "condition (2): intersection lies in an existing hyperplane",
            Condition::Defect => "condition (3): restriction defect differs from the target exponent",
            Condition::Multiplicity => "q <= p: block larger than the multiplicity of the top exponent",
        })
    }
}

/// Record of one addition step. Indices are 0-based positions in the
/// arrangement being verified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    /// 1-based step number.
    pub step: usize,
    pub members: Vec<usize>,
    /// Target exponent slots (1-based) for second-variant steps.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slots: Option<Vec<usize>>,
    pub rank: usize,
    pub codim_ok: bool,
    /// First already-present hyperplane (0-based index into the prefix
    /// order of the arrangement) containing the intersection, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocking: Option<usize>,
    pub avoidance_ok: bool,
    pub defects: Vec<usize>,
    pub required: Vec<usize>,
    pub defect_ok: bool,
    pub multiplicity_ok: bool,
    pub exponents_before: ExponentVector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents_after: Option<ExponentVector>,
}

impl StepReport {
    pub fn passed(&self) -> bool {
        self.failed_condition().is_none()
    }

    /// First violated condition in the order (1), (2), (3), `q <= p`.
    pub fn failed_condition(&self) -> Option<Condition> {
        if !self.codim_ok {
            Some(Condition::Codimension)
        } else if !self.avoidance_ok {
            Some(Condition::Avoidance)
        } else if !self.defect_ok {
            Some(Condition::Defect)
        } else if !self.multiplicity_ok {
            Some(Condition::Multiplicity)
        } else {
            None
        }
    }
}

/// `|A'| - |(A' ∪ {H})^H|`.
pub fn defect(aprime: &Arrangement, h: &Hyperplane) -> Result<usize> {
    if aprime.contains(h) {
        return Err(Error::HyperplaneInArrangement);
    }
    Ok(aprime.len() - restriction_size(aprime, h)?)
}

fn check_exps(aprime: &Arrangement, exps: &ExponentVector) -> Result<()> {
    if exps.len() != aprime.dim() {
        return Err(Error::ExponentLength { expected: aprime.dim(), found: exps.len() });
    }
    Ok(())
}

fn check_disjoint(aprime: &Arrangement, hs: &[&Hyperplane]) -> Result<()> {
    if hs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut seen = HashSet::new();
    for h in hs {
        if aprime.contains(h) || !seen.insert(*h) {
            return Err(Error::HyperplaneInArrangement);
        }
        if h.dim() != aprime.dim() {
            return Err(Error::DimensionMismatch { expected: aprime.dim(), found: h.dim() });
        }
    }
    Ok(())
}

/// Conditions (1) and (2): rank of the block, and the first hyperplane of
/// `aprime` containing its intersection.
fn independence_and_avoidance(aprime: &Arrangement, hs: &[Hyperplane]) -> Result<(usize, Option<usize>)> {
    let r = rank(hs)?;
    let x = intersection_subspace(hs)?;
    let blocking = aprime.hyperplanes().iter().position(|k| subspace_in_hyperplane(&x, k));
    Ok((r, blocking))
}

fn defects_of(aprime: &Arrangement, hs: &[Hyperplane]) -> Result<Vec<usize>> {
    hs.par_iter().map(|h| defect(aprime, h)).collect()
}

/// Checks one step of the Multiple Addition Theorem: adding `block` to an
/// arrangement `aprime` with certified exponents `exps`.
pub fn check_mat_step(aprime: &Arrangement, exps: &ExponentVector, block: &[Hyperplane]) -> Result<StepReport> {
    check_exps(aprime, exps)?;
    check_disjoint(aprime, &block.iter().collect::<Vec<_>>())?;
    let q = block.len();
    let d = exps.top();
    let p = exps.top_multiplicity();
    let (r, blocking) = independence_and_avoidance(aprime, block)?;
    let defects = defects_of(aprime, block)?;
    let codim_ok = r == q;
    let avoidance_ok = blocking.is_none();
    let defect_ok = defects.iter().all(|&x| x == d);
    let multiplicity_ok = q <= p;
    let mut report = StepReport {
        step: 1,
        members: (0..q).collect(),
        slots: None,
        rank: r,
        codim_ok,
        blocking,
        avoidance_ok,
        defects,
        required: vec![d; q],
        defect_ok,
        multiplicity_ok,
        exponents_before: exps.clone(),
        exponents_after: None,
    };
    if report.passed() {
        report.exponents_after = Some(exps.bump_suffix(exps.len() - q + 1));
    }
    Ok(report)
}

/// Checks one step of the second variant: each `(H, j)` targets exponent
/// slot `j` (1-based); the slots must be exactly `s..=l` with `s > t`.
pub fn check_mat2_step(
    aprime: &Arrangement,
    exps: &ExponentVector,
    slotted: &[(Hyperplane, usize)],
) -> Result<StepReport> {
    check_exps(aprime, exps)?;
    let hs: Vec<&Hyperplane> = slotted.iter().map(|(h, _)| h).collect();
    check_disjoint(aprime, &hs)?;
    let l = exps.len();
    if slotted.len() > l {
        return Err(Error::BlockSizeOutOfRange { size: slotted.len(), dim: l });
    }
    let mut slots: Vec<usize> = slotted.iter().map(|&(_, j)| j).collect();
    slots.sort_unstable();
    let s = l + 1 - slotted.len();
    if slots != (s..=l).collect::<Vec<_>>() {
        return Err(Error::InvalidSlots(format!("slots {slots:?} are not {s}..={l}")));
    }
    let t = if aprime.is_empty() { 0 } else { exps.first_nonzero() };
    if s <= t {
        return Err(Error::SlotStartTooSmall { s, t });
    }
    let block: Vec<Hyperplane> = slotted.iter().map(|(h, _)| h.clone()).collect();
    let (r, blocking) = independence_and_avoidance(aprime, &block)?;
    let defects = defects_of(aprime, &block)?;
    let required: Vec<usize> = slotted.iter().map(|&(_, j)| exps.as_slice()[j - 1]).collect();
    let mut report = StepReport {
        step: 1,
        members: (0..block.len()).collect(),
        slots: Some(slotted.iter().map(|&(_, j)| j).collect()),
        rank: r,
        codim_ok: r == block.len(),
        blocking,
        avoidance_ok: blocking.is_none(),
        defect_ok: defects == required,
        defects,
        required,
        multiplicity_ok: true,
        exponents_before: exps.clone(),
        exponents_after: None,
    };
    if report.passed() {
        report.exponents_after = Some(exps.bump_suffix(s));
    }
    Ok(report)
}

/// Dual-partition count: `d_i = |{k : |pi_k| >= l - i + 1}|`.
pub fn exponents_from_partition(block_sizes: &[usize], dim: usize) -> Result<ExponentVector> {
    if let Some(&size) = block_sizes.iter().find(|&&s| s == 0 || s > dim) {
        return Err(Error::BlockSizeOutOfRange { size, dim });
    }
    let v = (1..=dim).map(|i| block_sizes.iter().filter(|&&s| s > dim - i).count()).collect();
    Ok(ExponentVector::new(v))
}

/// Inverse of [`exponents_from_partition`]: the non-increasing block sizes
/// determined by an exponent vector (the exponents must be those of a
/// partition).
pub fn block_sizes_from_exponents(exps: &ExponentVector) -> Vec<usize> {
    let l = exps.len();
    let top = exps.top();
    (1..=top).map(|k| (1..=l).filter(|&i| exps.as_slice()[i - 1] >= k).count()).collect()
}

/// Reason a certificate was refused.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    /// 1-based step at which verification stopped.
    pub step: usize,
    pub condition: Condition,
    /// Reports up to and including the failing step.
    pub reports: Vec<StepReport>,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {} violates {}", self.step, self.condition)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification<C> {
    Certified(C),
    Rejected(Rejection),
}

impl<C> Verification<C> {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verification::Certified(_))
    }

    pub fn certified(self) -> Option<C> {
        match self {
            Verification::Certified(c) => Some(c),
            Verification::Rejected(_) => None,
        }
    }

    pub fn map<D>(self, f: impl FnOnce(C) -> D) -> Verification<D> {
        match self {
            Verification::Certified(c) => Verification::Certified(f(c)),
            Verification::Rejected(r) => Verification::Rejected(r),
        }
    }

    pub fn rejection(&self) -> Option<&Rejection> {
        match self {
            Verification::Certified(_) => None,
            Verification::Rejected(r) => Some(r),
        }
    }
}

/// A verified ordered partition (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatCertificate {
    pub arrangement: Arrangement,
    pub blocks: Vec<Vec<usize>>,
    pub exponents: ExponentVector,
    pub reports: Vec<StepReport>,
}

/// One second-variant step: start slot `s` and `(index, slot)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mat2Step {
    pub s: usize,
    pub slotted: Vec<(usize, usize)>,
}

impl Mat2Step {
    pub fn indices(&self) -> Vec<usize> {
        self.slotted.iter().map(|&(i, _)| i).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2Certificate {
    pub arrangement: Arrangement,
    pub steps: Vec<Mat2Step>,
    /// Exponents after each step.
    pub trace: Vec<ExponentVector>,
    pub reports: Vec<StepReport>,
}

impl Mat2Certificate {
    pub fn exponents(&self) -> ExponentVector {
        self.trace.last().cloned().unwrap_or_else(|| ExponentVector::zeros(self.arrangement.dim()))
    }
}

fn check_partition(n: usize, blocks: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; n];
    for (k, b) in blocks.iter().enumerate() {
        if b.is_empty() {
            return Err(Error::NotAPartition(format!("block {} is empty", k + 1)));
        }
        for &i in b {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, len: n });
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAPartition(format!("hyperplane {} appears twice", i + 1)));
            }
        }
    }
    if let Some(i) = seen.iter().position(|&s| !s) {
        return Err(Error::NotAPartition(format!("hyperplane {} is not covered", i + 1)));
    }
    Ok(())
}

/// Verifies an ordered partition block by block, accumulating exponents.
pub fn verify_mat_partition(a: &Arrangement, blocks: &[Vec<usize>]) -> Result<Verification<MatCertificate>> {
    check_partition(a.len(), blocks)?;
    let mut placed: Vec<usize> = Vec::new();
    let mut exps = ExponentVector::zeros(a.dim());
    let mut reports = Vec::with_capacity(blocks.len());
    for (k, b) in blocks.iter().enumerate() {
        let aprime = a.subarrangement(&placed)?;
        let hs: Vec<Hyperplane> = b.iter().map(|&i| a.hyperplanes()[i].clone()).collect();
        let mut report = check_mat_step(&aprime, &exps, &hs)?;
        report.step = k + 1;
        report.members = b.clone();
        report.blocking = report.blocking.map(|j| placed[j]);
        match report.failed_condition() {
            Some(condition) => {
                reports.push(report);
                return Ok(Verification::Rejected(Rejection { step: k + 1, condition, reports }));
            }
            None => {
                exps = report.exponents_after.clone().expect("passed step has exponents");
                reports.push(report);
                placed.extend_from_slice(b);
            }
        }
    }
    let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
    let dual = exponents_from_partition(&sizes, a.dim())?;
    debug_assert_eq!(dual, exps, "step bookkeeping disagrees with the dual partition");
    Ok(Verification::Certified(MatCertificate {
        arrangement: a.clone(),
        blocks: blocks.to_vec(),
        exponents: dual,
        reports,
    }))
}

/// Verifies a sequence of second-variant steps.
pub fn verify_mat2_sequence(a: &Arrangement, steps: &[Mat2Step]) -> Result<Verification<Mat2Certificate>> {
    let blocks: Vec<Vec<usize>> = steps.iter().map(Mat2Step::indices).collect();
    check_partition(a.len(), &blocks)?;
    let mut placed: Vec<usize> = Vec::new();
    let mut exps = ExponentVector::zeros(a.dim());
    let mut reports = Vec::with_capacity(steps.len());
    let mut trace = Vec::with_capacity(steps.len());
    for (k, step) in steps.iter().enumerate() {
        let aprime = a.subarrangement(&placed)?;
        let slotted: Vec<(Hyperplane, usize)> =
            step.slotted.iter().map(|&(i, j)| (a.hyperplanes()[i].clone(), j)).collect();
        let expected_s = a.dim() + 1 - step.slotted.len();
        if step.s != expected_s {
            return Err(Error::InvalidSlots(format!(
                "step {} declares s = {} but has {} hyperplanes",
                k + 1,
                step.s,
                step.slotted.len()
            )));
        }
        let mut report = check_mat2_step(&aprime, &exps, &slotted)?;
        report.step = k + 1;
        report.members = step.indices();
        report.blocking = report.blocking.map(|j| placed[j]);
        match report.failed_condition() {
            Some(condition) => {
                reports.push(report);
                return Ok(Verification::Rejected(Rejection { step: k + 1, condition, reports }));
            }
            None => {
                exps = report.exponents_after.clone().expect("passed step has exponents");
                trace.push(exps.clone());
                reports.push(report);
                placed.extend(step.indices());
            }
        }
    }
    Ok(Verification::Certified(Mat2Certificate {
        arrangement: a.clone(),
        steps: steps.to_vec(),
        trace,
        reports,
    }))
}

/// Canonical slot assignment for adding `block` to `aprime`: the block
/// targets the top `|block|` slots, and hyperplanes sorted by
/// `(defect, index)` are matched with slots in increasing order.
pub fn assign_slots(aprime: &Arrangement, exps: &ExponentVector, a: &Arrangement, block: &[usize]) -> Result<Mat2Step> {
    let l = exps.len();
    if block.is_empty() || block.len() > l {
        return Err(Error::BlockSizeOutOfRange { size: block.len(), dim: l });
    }
    let s = l + 1 - block.len();
    let mut keyed = Vec::with_capacity(block.len());
    for &i in block {
        keyed.push((defect(aprime, a.get(i)?)?, i));
    }
    keyed.sort_unstable();
    Ok(Mat2Step { s, slotted: keyed.into_iter().enumerate().map(|(o, (_, i))| (i, s + o)).collect() })
}

/// Verifies blocks as second-variant steps with canonical slot assignment.
pub fn verify_mat2_blocks(a: &Arrangement, blocks: &[Vec<usize>]) -> Result<Verification<Mat2Certificate>> {
    check_partition(a.len(), blocks)?;
    let mut placed: Vec<usize> = Vec::new();
    let mut exps = ExponentVector::zeros(a.dim());
    let mut steps = Vec::with_capacity(blocks.len());
    for b in blocks {
        let aprime = a.subarrangement(&placed)?;
        let step = assign_slots(&aprime, &exps, a, b)?;
        let slotted: Vec<(Hyperplane, usize)> =
            step.slotted.iter().map(|&(i, j)| (a.hyperplanes()[i].clone(), j)).collect();
        let report = check_mat2_step(&aprime, &exps, &slotted)?;
        steps.push(step);
        placed.extend_from_slice(b);
        match report.exponents_after {
            Some(next) => exps = next,
            None => return verify_prefix_failure(a, &steps),
        }
    }
    verify_mat2_sequence(a, &steps)
}

/// Re-runs the verifier on a step prefix whose last step fails, producing
/// the rejection with full reports.
fn verify_prefix_failure(a: &Arrangement, steps: &[Mat2Step]) -> Result<Verification<Mat2Certificate>> {
    let mut placed: Vec<usize> = Vec::new();
    let mut exps = ExponentVector::zeros(a.dim());
    let mut reports = Vec::new();
    for (k, step) in steps.iter().enumerate() {
        let aprime = a.subarrangement(&placed)?;
        let slotted: Vec<(Hyperplane, usize)> =
            step.slotted.iter().map(|&(i, j)| (a.hyperplanes()[i].clone(), j)).collect();
        let mut report = check_mat2_step(&aprime, &exps, &slotted)?;
        report.step = k + 1;
        report.members = step.indices();
        report.blocking = report.blocking.map(|j| placed[j]);
        if let Some(condition) = report.failed_condition() {
            reports.push(report);
            return Ok(Verification::Rejected(Rejection { step: k + 1, condition, reports }));
        }
        exps = report.exponents_after.clone().expect("passed");
        reports.push(report);
        placed.extend(step.indices());
    }
    unreachable!("prefix was expected to fail at its last step")
}

/// Every verified partition is also a valid step sequence of the second
/// variant: each block becomes one step on the top slots.
pub fn mat_to_mat2(cert: &MatCertificate) -> Result<Verification<Mat2Certificate>> {
    verify_mat2_blocks(&cert.arrangement, &cert.blocks)
}

/// Outcome of the restriction-size necessary condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum FilterStatus {
    /// Some hyperplane satisfies `|A| - |A^H| = d_l`; witnesses are 0-based.
    Pass { witnesses: Vec<usize> },
    /// No hyperplane does: the arrangement is not MAT2-free.
    Fail,
    /// The condition is stated for nonempty arrangements only.
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterOutcome {
    pub status: FilterStatus,
    pub top_exponent: usize,
    /// `|A| - |A^H|` for every hyperplane, in arrangement order.
    pub differences: Vec<usize>,
}

impl FilterOutcome {
    pub fn passed(&self) -> bool {
        matches!(self.status, FilterStatus::Pass { .. })
    }

    pub fn witnesses(&self) -> &[usize] {
        match &self.status {
            FilterStatus::Pass { witnesses } => witnesses,
            _ => &[],
        }
    }
}

/// A nonempty MAT2-free arrangement has some `H` with
/// `|A| - |A^H| = d_l`; a failure proves the arrangement is not MAT2-free
/// (given that `exps` are its exponents).
pub fn necessary_filter(a: &Arrangement, exps: &ExponentVector) -> Result<FilterOutcome> {
    if exps.len() != a.dim() {
        return Err(Error::ExponentLength { expected: a.dim(), found: exps.len() });
    }
    let top = exps.top();
    if a.is_empty() {
        return Ok(FilterOutcome { status: FilterStatus::Inapplicable, top_exponent: top, differences: vec![] });
    }
    let differences: Vec<usize> = a
        .hyperplanes()
        .par_iter()
        .map(|h| restriction_size(a, h).map(|r| a.len() - r))
        .collect::<Result<_>>()?;
    let witnesses: Vec<usize> = (0..a.len()).filter(|&i| differences[i] == top).collect();
    let status = if witnesses.is_empty() { FilterStatus::Fail } else { FilterStatus::Pass { witnesses } };
    Ok(FilterOutcome { status, top_exponent: top, differences })
}

/// Tabulated invariants for an arrangement whose forms are not available.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactsRecord {
    pub name: String,
    pub size: usize,
    pub exponents: ExponentVector,
    /// `|A^H|`, constant over `H` in the recorded cases.
    pub restriction_size: Option<usize>,
    pub no_free_filtration: bool,
    pub note: Option<String>,
}

impl FactsRecord {
    /// `|A| - |A^H|`, when the restriction size is tabulated.
    pub fn restriction_difference(&self) -> Option<usize> {
        self.restriction_size.map(|r| self.size - r)
    }
}

/// The necessary condition evaluated on tabulated data.
pub fn necessary_filter_tabulated(f: &FactsRecord) -> Result<bool> {
    let diff = f.restriction_difference().ok_or_else(|| {
        Error::InvalidParameters(format!("{} has no tabulated restriction size", f.name))
    })?;
    Ok(diff == f.exponents.top())
}

/// One hyperplane added in a free filtration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationStep {
    pub size: usize,
    /// 0-based index of the hyperplane added at this step.
    pub added: usize,
    pub exponents: ExponentVector,
}

/// Either kind of certificate, for operations defined on both.
#[derive(Debug, Clone, Copy)]
pub enum AnyCertificate<'a> {
    Mat(&'a MatCertificate),
    Mat2(&'a Mat2Certificate),
}

impl<'a> From<&'a MatCertificate> for AnyCertificate<'a> {
    fn from(c: &'a MatCertificate) -> Self {
        AnyCertificate::Mat(c)
    }
}

impl<'a> From<&'a Mat2Certificate> for AnyCertificate<'a> {
    fn from(c: &'a Mat2Certificate) -> Self {
        AnyCertificate::Mat2(c)
    }
}

/// Chain of sub-arrangements growing one hyperplane at a time, with the
/// exponents of every prefix. Within a step each added hyperplane raises
/// the exponent of its own slot; across steps the certificate order is
/// followed. The certificate is re-verified first.
pub fn free_filtration<'a>(cert: impl Into<AnyCertificate<'a>>) -> Result<Vec<FiltrationStep>> {
    let (a, steps): (&Arrangement, Vec<Mat2Step>) = match cert.into() {
        AnyCertificate::Mat(c) => {
            if !verify_mat_partition(&c.arrangement, &c.blocks)?.is_certified() {
                return Err(Error::Certificate("certificate does not verify".into()));
            }
            let l = c.arrangement.dim();
            let steps = c
                .blocks
                .iter()
                .map(|b| {
                    let s = l + 1 - b.len();
                    Mat2Step { s, slotted: b.iter().enumerate().map(|(o, &i)| (i, s + o)).collect() }
                })
                .collect();
            (&c.arrangement, steps)
        }
        AnyCertificate::Mat2(c) => {
            if !verify_mat2_sequence(&c.arrangement, &c.steps)?.is_certified() {
                return Err(Error::Certificate("certificate does not verify".into()));
            }
            (&c.arrangement, c.steps.clone())
        }
    };
    let mut base = ExponentVector::zeros(a.dim()).into_vec();
    let mut chain = Vec::with_capacity(a.len());
    for step in &steps {
        let mut current = base.clone();
        for &(i, j) in &step.slotted {
            current[j - 1] += 1;
            chain.push(FiltrationStep { size: chain.len() + 1, added: i, exponents: ExponentVector::new(current.clone()) });
        }
        base = ExponentVector::new(current).into_vec();
    }
    Ok(chain)
}

/// Certificate for `A1 × A2` whose `k`-th block is the union of the `k`-th
/// blocks of the factors. Always re-verified.
pub fn product_partition(c1: &MatCertificate, c2: &MatCertificate) -> Result<MatCertificate> {
    let a = product(&c1.arrangement, &c2.arrangement);
    let offset = c1.arrangement.len();
    let n = c1.blocks.len().max(c2.blocks.len());
    let blocks: Vec<Vec<usize>> = (0..n)
        .map(|k| {
            let mut b: Vec<usize> = c1.blocks.get(k).cloned().unwrap_or_default();
            b.extend(c2.blocks.get(k).into_iter().flatten().map(|&i| i + offset));
            b
        })
        .collect();
    match verify_mat_partition(&a, &blocks)? {
        Verification::Certified(c) => Ok(c),
        Verification::Rejected(r) => Err(Error::Reverification(r.to_string())),
    }
}

/// Splits a certificate of a product arrangement (first factor on the
/// first `dim1` coordinates) into certificates of the two factors by
/// taking the nonempty factors of each block. Both are re-verified.
pub fn split_product_certificate(cert: &MatCertificate, dim1: usize) -> Result<(MatCertificate, MatCertificate)> {
    let a = &cert.arrangement;
    if dim1 > a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: dim1 });
    }
    let n = a.conductor();
    let mut side = Vec::with_capacity(a.len());
    let mut local = Vec::with_capacity(a.len());
    let mut hs1: Vec<Hyperplane> = Vec::new();
    let mut hs2: Vec<Hyperplane> = Vec::new();
    for (i, h) in a.hyperplanes().iter().enumerate() {
        let cov = h.covector();
        let left_zero = cov[..dim1].iter().all(CycloScalar::is_zero);
        let right_zero = cov[dim1..].iter().all(CycloScalar::is_zero);
        if right_zero {
            side.push(0);
            local.push(hs1.len());
            hs1.push(Hyperplane::new(cov[..dim1].to_vec())?);
        } else if left_zero {
            side.push(1);
            local.push(hs2.len());
            hs2.push(Hyperplane::new(cov[dim1..].to_vec())?);
        } else {
            return Err(Error::InvalidParameters(format!("hyperplane {} is not a product hyperplane", i + 1)));
        }
    }
    let a1 = Arrangement::new(dim1, n, hs1)?;
    let a2 = Arrangement::new(a.dim() - dim1, n, hs2)?;
    let mut blocks1 = Vec::new();
    let mut blocks2 = Vec::new();
    for b in &cert.blocks {
        let f1: Vec<usize> = b.iter().filter(|&&i| side[i] == 0).map(|&i| local[i]).collect();
        let f2: Vec<usize> = b.iter().filter(|&&i| side[i] == 1).map(|&i| local[i]).collect();
        if !f1.is_empty() {
            blocks1.push(f1);
        }
        if !f2.is_empty() {
            blocks2.push(f2);
        }
    }
    let verify = |a: &Arrangement, blocks: &[Vec<usize>]| -> Result<MatCertificate> {
        match verify_mat_partition(a, blocks)? {
            Verification::Certified(c) => Ok(c),
            Verification::Rejected(r) => Err(Error::Reverification(r.to_string())),
        }
    };
    Ok((verify(&a1, &blocks1)?, verify(&a2, &blocks2)?))
}
