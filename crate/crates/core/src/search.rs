//! Backtracking search for MAT-partitions and second-variant step
//! sequences, plus a brute-force oracle for small arrangements.
//!
//! Hyperplanes are tracked as bits of a `u128`. Two tables are computed
//! once per arrangement with exact arithmetic: for every `H`, the grouping
//! of the other hyperplanes by their intersection with `H` (so restriction
//! sizes become popcounts), and, lazily per worker, the flat closure of each
//! block (so independence and avoidance become mask tests).
//!
//! Failed `placed` sets are memoized. This is sound because the exponents
//! of a free arrangement are intrinsic: every path reaching the same set of
//! placed hyperplanes carries the same exponents, hence faces the same
//! subtree. Debug builds assert this on every memo hit.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrangement::{pair_intersection, Arrangement, ExponentVector, Subspace};
use crate::error::{Error, Result};
use crate::linalg::{in_row_span, rref, Row};
use crate::matkernel::{
    verify_mat2_blocks, verify_mat2_sequence, verify_mat_partition, AnyCertificate, Mat2Certificate, Mat2Step,
    MatCertificate, Verification,
};

/// Maximum number of hyperplanes the search handles.
pub const CAPACITY: usize = 128;

/// Largest arrangement accepted by [`brute_force_oracle`].
pub const ORACLE_LIMIT: usize = 8;

type Mask = u128;

fn bit(i: usize) -> Mask {
    1 << i
}

fn full_mask(n: usize) -> Mask {
    if n == CAPACITY {
        Mask::MAX
    } else {
        bit(n) - 1
    }
}

fn indices_of(mut m: Mask) -> Vec<usize> {
    let mut v = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        v.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Mat,
    Mat2,
}

/// A node of the search: which hyperplanes are placed, how many blocks
/// were used, and the exponents of the placed sub-arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchState {
    pub placed: Mask,
    pub block_count: usize,
    pub exponents: ExponentVector,
}

impl SearchState {
    pub fn empty(dim: usize) -> Self {
        SearchState { placed: 0, block_count: 0, exponents: ExponentVector::zeros(dim) }
    }

    /// State after placing `blocks` (0-based) in MAT mode.
    pub fn from_blocks(dim: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut placed = 0;
        let mut exps = ExponentVector::zeros(dim);
        for b in blocks {
            if b.is_empty() || b.len() > dim {
                return Err(Error::BlockSizeOutOfRange { size: b.len(), dim });
            }
            for &i in b {
                if i >= CAPACITY {
                    return Err(Error::CapacityExceeded { len: i + 1, capacity: CAPACITY });
                }
                placed |= bit(i);
            }
            exps = exps.bump_suffix(dim + 1 - b.len());
        }
        Ok(SearchState { placed, block_count: blocks.len(), exponents: exps })
    }

    pub fn placed_indices(&self) -> Vec<usize> {
        indices_of(self.placed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: Mode,
    pub node_budget: u64,
    pub worker_count: usize,
    pub memoization: bool,
    /// Allowed first blocks (0-based). When set, an exhaustion verdict is
    /// relative to these choices.
    pub first_block_restriction: Option<Vec<Vec<usize>>>,
    /// Print progress lines to stderr about once per second.
    pub progress: bool,
}

impl SearchConfig {
    pub fn new(mode: Mode) -> Self {
        SearchConfig {
            mode,
            node_budget: 50_000_000,
            worker_count: 1,
            memoization: true,
            first_block_restriction: None,
            progress: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.node_budget == 0 {
            return Err(Error::InvalidParameters("node budget must be positive".into()));
        }
        if self.worker_count == 0 {
            return Err(Error::InvalidParameters("worker count must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    ExhaustedNone,
    BudgetExceeded,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Certified => "certified",
            Verdict::ExhaustedNone => "exhausted_none",
            Verdict::BudgetExceeded => "budget_exceeded",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub memo_hits: u64,
    pub wall_seconds: f64,
    /// Expanded nodes per depth (number of blocks already placed).
    pub depth_histogram: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Mat(MatCertificate),
    Mat2(Mat2Certificate),
}

impl Certificate {
    pub fn exponents(&self) -> ExponentVector {
        match self {
            Certificate::Mat(c) => c.exponents.clone(),
            Certificate::Mat2(c) => c.exponents(),
        }
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        match self {
            Certificate::Mat(c) => c.blocks.clone(),
            Certificate::Mat2(c) => c.steps.iter().map(Mat2Step::indices).collect(),
        }
    }
}

impl<'a> From<&'a Certificate> for AnyCertificate<'a> {
    fn from(c: &'a Certificate) -> Self {
        match c {
            Certificate::Mat(c) => AnyCertificate::Mat(c),
            Certificate::Mat2(c) => AnyCertificate::Mat2(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
    pub stats: SearchStats,
    /// Whether a first-block restriction limited the search.
    pub restriction_in_force: bool,
}

impl SearchOutcome {
    pub fn exponents(&self) -> Option<ExponentVector> {
        self.certificate.as_ref().map(Certificate::exponents)
    }
}

/// Combinatorial data shared read-only by all workers.
struct Tables {
    n: usize,
    dim: usize,
    rows: Vec<Row>,
    /// `groups[h]`: the other hyperplanes grouped by their intersection
    /// with `h`.
    groups: Vec<Vec<Mask>>,
}

impl Tables {
    fn new(a: &Arrangement) -> Result<Self> {
        let n = a.len();
        if n > CAPACITY {
            return Err(Error::CapacityExceeded { len: n, capacity: CAPACITY });
        }
        let hs = a.hyperplanes();
        let pairs: Vec<Vec<Subspace>> = (0..n)
            .into_par_iter()
            .map(|h| (h + 1..n).map(|k| pair_intersection(&hs[h], &hs[k])).collect())
            .collect();
        let mut by_line: Vec<HashMap<&Subspace, Mask>> = vec![HashMap::new(); n];
        let mut order: Vec<Vec<&Subspace>> = vec![Vec::new(); n];
        for (h, row) in pairs.iter().enumerate() {
            for (o, x) in row.iter().enumerate() {
                let k = h + 1 + o;
                for (a, b) in [(h, k), (k, h)] {
                    let slot = by_line[a].entry(x).or_insert_with(|| {
                        order[a].push(x);
                        0
                    });
                    *slot |= bit(b);
                }
            }
        }
        let groups = (0..n).map(|h| order[h].iter().map(|x| by_line[h][x]).collect()).collect();
        Ok(Tables {
            n,
            dim: a.dim(),
            rows: hs.iter().map(|h| h.covector().to_vec()).collect(),
            groups,
        })
    }

    /// `|A'| - |(A' ∪ {H})^H|` for `A' = placed`, `h` not placed.
    fn defect(&self, placed: Mask, h: usize) -> usize {
        let hit = self.groups[h].iter().filter(|&&g| g & placed != 0).count();
        placed.count_ones() as usize - hit
    }

    /// Hyperplanes containing the intersection of `block`.
    fn closure(&self, block: Mask) -> Mask {
        let mut basis: Vec<Row> = indices_of(block).into_iter().map(|i| self.rows[i].clone()).collect();
        let pivots = rref(&mut basis);
        let mut out = block;
        for k in 0..self.n {
            if out & bit(k) == 0 && in_row_span(&basis, &pivots, &self.rows[k]) {
                out |= bit(k);
            }
        }
        out
    }

    fn independent(&self, block: Mask) -> bool {
        let mut basis: Vec<Row> = indices_of(block).into_iter().map(|i| self.rows[i].clone()).collect();
        rref(&mut basis).len() == block.count_ones() as usize
    }
}

/// Unplaced hyperplanes whose defect against the placed set is an allowed
/// value for the next step: the top exponent in MAT mode, any exponent of
/// an admissible suffix in MAT2 mode.
pub fn candidates(a: &Arrangement, state: &SearchState, mode: Mode) -> Result<Vec<usize>> {
    let t = Tables::new(a)?;
    if state.exponents.len() != a.dim() {
        return Err(Error::ExponentLength { expected: a.dim(), found: state.exponents.len() });
    }
    let exps = state.exponents.as_slice();
    let allowed: Vec<usize> = match mode {
        Mode::Mat => vec![state.exponents.top()],
        Mode::Mat2 => {
            let t = if state.placed == 0 { 0 } else { state.exponents.first_nonzero() };
            exps[t..].to_vec()
        }
    };
    Ok((0..t.n).filter(|&h| state.placed & bit(h) == 0 && allowed.contains(&t.defect(state.placed, h))).collect())
}

enum Flow {
    Found,
    Failed,
    Abort,
}

struct Shared<'a> {
    tables: &'a Tables,
    cfg: &'a SearchConfig,
    nodes: AtomicU64,
    memo_hits: AtomicU64,
    /// Lowest root index that succeeded so far; higher roots abort.
    best_root: AtomicUsize,
    start: Instant,
    last_report: AtomicU64,
}

struct Worker<'a> {
    shared: &'a Shared<'a>,
    closures: HashMap<Mask, Mask>,
    memo: HashMap<Mask, Vec<usize>>,
    depth_histogram: Vec<u64>,
    root: usize,
    blocks: Vec<Mask>,
}

impl<'a> Worker<'a> {
    fn new(shared: &'a Shared<'a>) -> Self {
        Worker {
            shared,
            closures: HashMap::new(),
            memo: HashMap::new(),
            depth_histogram: Vec::new(),
            root: 0,
            blocks: Vec::new(),
        }
    }

    fn closure(&mut self, block: Mask) -> Mask {
        if let Some(&c) = self.closures.get(&block) {
            return c;
        }
        let c = self.shared.tables.closure(block);
        self.closures.insert(block, c);
        c
    }

    fn tick(&mut self) -> bool {
        let s = self.shared;
        let nodes = s.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let depth = self.blocks.len();
        if self.depth_histogram.len() <= depth {
            self.depth_histogram.resize(depth + 1, 0);
        }
        self.depth_histogram[depth] += 1;
        if s.cfg.progress && nodes.is_multiple_of(4096) {
            let secs = s.start.elapsed().as_secs();
            if s.last_report.swap(secs, Ordering::Relaxed) < secs {
                let rate = nodes as f64 / s.start.elapsed().as_secs_f64().max(1e-9);
                eprintln!("progress: nodes={nodes} rate={rate:.0}/s depth_histogram={:?}", self.depth_histogram);
            }
        }
        nodes <= s.cfg.node_budget && s.best_root.load(Ordering::Relaxed) >= self.root
    }

    fn dfs(&mut self, placed: Mask, exps: &[usize]) -> Flow {
        let t = self.shared.tables;
        if placed == full_mask(t.n) {
            return Flow::Found;
        }
        if self.shared.cfg.memoization {
            if let Some(seen) = self.memo.get(&placed) {
                debug_assert_eq!(seen.as_slice(), exps, "exponents differ on a memo hit");
                self.shared.memo_hits.fetch_add(1, Ordering::Relaxed);
                return Flow::Failed;
            }
        }
        if !self.tick() {
            return Flow::Abort;
        }
        let flow = match self.shared.cfg.mode {
            Mode::Mat => self.expand_mat(placed, exps),
            Mode::Mat2 => self.expand_mat2(placed, exps),
        };
        if matches!(flow, Flow::Failed) && self.shared.cfg.memoization {
            self.memo.insert(placed, exps.to_vec());
        }
        flow
    }

    fn expand_mat(&mut self, placed: Mask, exps: &[usize]) -> Flow {
        let t = self.shared.tables;
        let top = *exps.last().expect("dim >= 1");
        let p = exps.iter().filter(|&&d| d == top).count();
        let cands: Vec<usize> =
            (0..t.n).filter(|&h| placed & bit(h) == 0 && t.defect(placed, h) == top).collect();
        for q in (1..=p.min(cands.len())).rev() {
            let mut next = exps.to_vec();
            for d in &mut next[t.dim - q..] {
                *d += 1;
            }
            let mut need = Need::Any;
            match self.subsets(placed, &cands, 0, 0, 0, q, &mut need, &next) {
                Flow::Failed => {}
                other => return other,
            }
        }
        Flow::Failed
    }

    fn expand_mat2(&mut self, placed: Mask, exps: &[usize]) -> Flow {
        let t = self.shared.tables;
        let l = t.dim;
        let first_nonzero = if placed == 0 { 0 } else { exps.iter().position(|&d| d != 0).map_or(0, |i| i + 1) };
        let defects: Vec<Option<usize>> =
            (0..t.n).map(|h| (placed & bit(h) == 0).then(|| t.defect(placed, h))).collect();
        for q in (1..=l).rev() {
            let s = l + 1 - q;
            if s <= first_nonzero {
                continue;
            }
            let required = &exps[s - 1..];
            let cands: Vec<usize> =
                (0..t.n).filter(|&h| defects[h].is_some_and(|d| required.contains(&d))).collect();
            if cands.len() < q {
                continue;
            }
            let mut counts: Vec<(usize, usize)> = Vec::new();
            for &d in required {
                match counts.iter_mut().find(|(v, _)| *v == d) {
                    Some(c) => c.1 += 1,
                    None => counts.push((d, 1)),
                }
            }
            let mut need = Need::Counts { counts, defects: defects.clone() };
            let mut next = exps.to_vec();
            for d in &mut next[s - 1..] {
                *d += 1;
            }
            match self.subsets(placed, &cands, 0, 0, 0, q, &mut need, &next) {
                Flow::Failed => {}
                other => return other,
            }
        }
        Flow::Failed
    }

    /// Enumerates independent, avoiding `q`-subsets of `cands` in
    /// lexicographic order and recurses into each.
    #[allow(clippy::too_many_arguments)]
    fn subsets(
        &mut self,
        placed: Mask,
        cands: &[usize],
        start: usize,
        block: Mask,
        closure: Mask,
        q: usize,
        need: &mut Need,
        next: &[usize],
    ) -> Flow {
        let size = block.count_ones() as usize;
        if size == q {
            self.blocks.push(block);
            let flow = self.dfs(placed | block, next);
            if !matches!(flow, Flow::Found) {
                self.blocks.pop();
            }
            return flow;
        }
        for i in start..cands.len() {
            if cands.len() - i < q - size {
                break;
            }
            let h = cands[i];
            if closure & bit(h) != 0 || !need.take(h) {
                continue;
            }
            let b = block | bit(h);
            let c = self.closure(b);
            let flow = if c & placed == 0 { self.subsets(placed, cands, i + 1, b, c, q, need, next) } else { Flow::Failed };
            need.give(h);
            match flow {
                Flow::Failed => {}
                other => return other,
            }
        }
        Flow::Failed
    }
}

/// Remaining defect multiplicities a MAT2 block still has to match.
enum Need {
    Any,
    Counts { counts: Vec<(usize, usize)>, defects: Vec<Option<usize>> },
}

impl Need {
    fn take(&mut self, h: usize) -> bool {
        match self {
            Need::Any => true,
            Need::Counts { counts, defects } => {
                let d = defects[h].expect("candidate is unplaced");
                match counts.iter_mut().find(|(v, c)| *v == d && *c > 0) {
                    Some(c) => {
                        c.1 -= 1;
                        true
                    }
                    None => false,
                }
            }
        }
    }

    fn give(&mut self, h: usize) {
        if let Need::Counts { counts, defects } = self {
            let d = defects[h].expect("candidate is unplaced");
            if let Some(c) = counts.iter_mut().find(|(v, _)| *v == d) {
                c.1 += 1;
            }
        }
    }
}

enum RootResult {
    Found(Vec<Mask>),
    Failed,
    Abort,
}

/// First blocks handed out in search order: decreasing size, then
/// lexicographic. Candidates are not filtered here; [`run_root`] rejects
/// dependent ones.
struct RootQueue {
    explicit: Option<Vec<Mask>>,
    n: usize,
    combo: Vec<usize>,
    next_index: usize,
    done: bool,
}

impl RootQueue {
    fn new(t: &Tables, explicit: Option<Vec<Mask>>) -> Self {
        let q = t.dim.min(t.n);
        RootQueue { explicit, n: t.n, combo: (0..q).collect(), next_index: 0, done: q == 0 }
    }

    fn pop(&mut self) -> Option<(usize, Mask)> {
        let idx = self.next_index;
        let mask = match &self.explicit {
            Some(list) => *list.get(idx)?,
            None => {
                if self.done {
                    return None;
                }
                let mask = self.combo.iter().fold(0, |m, &i| m | bit(i));
                self.advance();
                mask
            }
        };
        self.next_index += 1;
        Some((idx, mask))
    }

    fn advance(&mut self) {
        let (n, q) = (self.n, self.combo.len());
        let mut i = q;
        while i > 0 && self.combo[i - 1] == n - q + i - 1 {
            i -= 1;
        }
        if i > 0 {
            self.combo[i - 1] += 1;
            for j in i..q {
                self.combo[j] = self.combo[j - 1] + 1;
            }
        } else if q > 1 {
            self.combo = (0..q - 1).collect();
        } else {
            self.done = true;
        }
    }
}

fn search(a: &Arrangement, cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let start = Instant::now();
    let tables = Tables::new(a)?;
    let shared = Shared {
        tables: &tables,
        cfg,
        nodes: AtomicU64::new(0),
        memo_hits: AtomicU64::new(0),
        best_root: AtomicUsize::new(usize::MAX),
        start,
        last_report: AtomicU64::new(0),
    };
    let zeros = vec![0; a.dim()];
    let mut histogram: Vec<u64> = Vec::new();
    let merge = |h: &mut Vec<u64>, w: &[u64]| {
        if h.len() < w.len() {
            h.resize(w.len(), 0);
        }
        for (x, y) in h.iter_mut().zip(w) {
            *x += y;
        }
    };

    let result: RootResult = if cfg.first_block_restriction.is_none() && cfg.worker_count == 1 {
        let mut w = Worker::new(&shared);
        let r = match w.dfs(0, &zeros) {
            Flow::Found => RootResult::Found(w.blocks.clone()),
            Flow::Failed => RootResult::Failed,
            Flow::Abort => RootResult::Abort,
        };
        merge(&mut histogram, &w.depth_histogram);
        r
    } else {
        let explicit = match &cfg.first_block_restriction {
            Some(list) => Some(
                list.iter()
                    .map(|b| {
                        b.iter().try_fold(0, |m, &i| {
                            if i >= tables.n {
                                Err(Error::IndexOutOfRange { index: i, len: tables.n })
                            } else {
                                Ok(m | bit(i))
                            }
                        })
                    })
                    .collect::<Result<Vec<Mask>>>()?,
            ),
            None => None,
        };
        // Workers pull roots in order, so lower roots are always finished
        // before a later success is accepted.
        let queue = Mutex::new(RootQueue::new(&tables, explicit));
        let mut per_root: Vec<(usize, RootResult)> = Vec::new();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..cfg.worker_count)
                .map(|_| {
                    scope.spawn(|| {
                        let mut w = Worker::new(&shared);
                        let mut results = Vec::new();
                        loop {
                            let Some((idx, root)) = queue.lock().expect("queue lock").pop() else { break };
                            if shared.best_root.load(Ordering::Relaxed) < idx {
                                break;
                            }
                            w.root = idx;
                            w.blocks.clear();
                            let r = run_root(&mut w, root, &zeros);
                            if matches!(r, RootResult::Found(_)) {
                                shared.best_root.fetch_min(idx, Ordering::Relaxed);
                            }
                            results.push((idx, r));
                        }
                        (results, w.depth_histogram)
                    })
                })
                .collect();
            for h in handles {
                let (results, hist) = h.join().expect("search worker panicked");
                merge(&mut histogram, &hist);
                per_root.extend(results);
            }
        });
        per_root.sort_by_key(|(i, _)| *i);
        let mut found = None;
        let mut aborted = false;
        for (_, r) in per_root {
            match r {
                RootResult::Found(b) if found.is_none() => found = Some(b),
                RootResult::Abort if found.is_none() => aborted = true,
                _ => {}
            }
        }
        match (found, aborted) {
            (Some(b), _) => RootResult::Found(b),
            (None, true) => RootResult::Abort,
            (None, false) => RootResult::Failed,
        }
    };

    let (verdict, certificate) = match result {
        RootResult::Found(blocks) => {
            let blocks: Vec<Vec<usize>> = blocks.into_iter().map(indices_of).collect();
            (Verdict::Certified, Some(reverify(a, cfg.mode, &blocks)?))
        }
        RootResult::Failed => (Verdict::ExhaustedNone, None),
        RootResult::Abort => (Verdict::BudgetExceeded, None),
    };
    Ok(SearchOutcome {
        verdict,
        certificate,
        stats: SearchStats {
            nodes: shared.nodes.load(Ordering::Relaxed),
            memo_hits: shared.memo_hits.load(Ordering::Relaxed),
            wall_seconds: start.elapsed().as_secs_f64(),
            depth_histogram: histogram,
        },
        restriction_in_force: cfg.first_block_restriction.is_some(),
    })
}

/// Searches below a fixed first block, which is checked like any step.
fn run_root(w: &mut Worker<'_>, root: Mask, zeros: &[usize]) -> RootResult {
    let t = w.shared.tables;
    let q = root.count_ones() as usize;
    if q == 0 || q > t.dim || !t.independent(root) {
        return RootResult::Failed;
    }
    if !w.tick() {
        return RootResult::Abort;
    }
    let mut next = zeros.to_vec();
    for d in &mut next[t.dim - q..] {
        *d += 1;
    }
    w.blocks.push(root);
    match w.dfs(root, &next) {
        Flow::Found => RootResult::Found(w.blocks.clone()),
        Flow::Failed => RootResult::Failed,
        Flow::Abort => RootResult::Abort,
    }
}

fn reverify(a: &Arrangement, mode: Mode, blocks: &[Vec<usize>]) -> Result<Certificate> {
    let v = match mode {
        Mode::Mat => verify_mat_partition(a, blocks)?.map(Certificate::Mat),
        Mode::Mat2 => verify_mat2_blocks(a, blocks)?.map(Certificate::Mat2),
    };
    match v {
        Verification::Certified(c) => Ok(c),
        Verification::Rejected(r) => Err(Error::Reverification(r.to_string())),
    }
}

/// Searches for a MAT-partition of `a`.
pub fn search_mat(a: &Arrangement, cfg: &SearchConfig) -> Result<SearchOutcome> {
    search(a, &SearchConfig { mode: Mode::Mat, ..cfg.clone() })
}

/// Searches for a second-variant step sequence of `a`.
pub fn search_mat2(a: &Arrangement, cfg: &SearchConfig) -> Result<SearchOutcome> {
    search(a, &SearchConfig { mode: Mode::Mat2, ..cfg.clone() })
}

/// Ordered set partitions of `mask`, depth first; `visit` returns `true`
/// to stop.
fn ordered_partitions(mask: Mask, prefix: &mut Vec<Mask>, visit: &mut dyn FnMut(&[Mask]) -> bool) -> bool {
    if mask == 0 {
        return visit(prefix);
    }
    // all nonempty submasks
    let mut sub = mask;
    while sub != 0 {
        prefix.push(sub);
        let stop = ordered_partitions(mask & !sub, prefix, visit);
        prefix.pop();
        if stop {
            return true;
        }
        sub = (sub - 1) & mask;
    }
    false
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Naive oracle: tries every ordered set partition (MAT) or every ordered
/// set partition with every slot assignment (MAT2), verifying each
/// candidate from scratch with the step kernel. Verification errors count
/// as rejections.
pub fn brute_force_oracle(a: &Arrangement, mode: Mode) -> Result<SearchOutcome> {
    if a.len() > ORACLE_LIMIT {
        return Err(Error::CapacityExceeded { len: a.len(), capacity: ORACLE_LIMIT });
    }
    let start = Instant::now();
    let mut nodes = 0u64;
    let mut found: Option<Certificate> = None;
    let l = a.dim();
    let mut visit = |blocks: &[Mask]| -> bool {
        let blocks: Vec<Vec<usize>> = blocks.iter().map(|&b| indices_of(b)).collect();
        match mode {
            Mode::Mat => {
                nodes += 1;
                if let Ok(Verification::Certified(c)) = verify_mat_partition(a, &blocks) {
                    found = Some(Certificate::Mat(c));
                    return true;
                }
            }
            Mode::Mat2 => {
                if blocks.iter().any(|b| b.len() > l) {
                    nodes += 1;
                    return false;
                }
                let perms: Vec<Vec<Vec<usize>>> = blocks.iter().map(|b| permutations(b)).collect();
                let mut choice = vec![0usize; blocks.len()];
                loop {
                    nodes += 1;
                    let steps: Vec<Mat2Step> = perms
                        .iter()
                        .zip(&choice)
                        .map(|(p, &c)| {
                            let order = &p[c];
                            let s = l + 1 - order.len();
                            Mat2Step { s, slotted: order.iter().enumerate().map(|(o, &i)| (i, s + o)).collect() }
                        })
                        .collect();
                    if let Ok(Verification::Certified(c)) = verify_mat2_sequence(a, &steps) {
                        found = Some(Certificate::Mat2(c));
                        return true;
                    }
                    // odometer over slot permutations
                    let mut k = 0;
                    while k < choice.len() {
                        choice[k] += 1;
                        if choice[k] < perms[k].len() {
                            break;
                        }
                        choice[k] = 0;
                        k += 1;
                    }
                    if k == choice.len() {
                        break;
                    }
                }
            }
        }
        false
    };
    ordered_partitions(full_mask(a.len()), &mut Vec::new(), &mut visit);
    let verdict = if found.is_some() { Verdict::Certified } else { Verdict::ExhaustedNone };
    Ok(SearchOutcome {
        verdict,
        certificate: found,
        stats: SearchStats { nodes, memo_hits: 0, wall_seconds: start.elapsed().as_secs_f64(), depth_histogram: vec![] },
        restriction_in_force: false,
    })
}
