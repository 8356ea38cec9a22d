//! Linear algebra over GF(2) and exact distance computations.
//!
//! Minimum distance is found either by enumerating every nonzero codeword
//! from a null-space basis (small dimension) or by a branch-and-bound search
//! over column supports. The same search, with a weaker row condition, finds
//! the stopping distance.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::incidence::BipartiteGraph;
use crate::sparse::SparseBitMatrix;

/// Codes up to this dimension have their minimum distance found by full
/// codeword enumeration.
pub const ENUMERATION_MAX_DIMENSION: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceStatus {
    Exact,
    LowerBoundOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMethod {
    Enumeration,
    SupportSearch,
    WitnessPlusBound,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistanceResult {
    /// The distance when exact, otherwise a proven lower bound. `None` means
    /// no nonempty set qualifies (for minimum distance: the code is {0}).
    pub value: Option<usize>,
    pub status: DistanceStatus,
    /// A support achieving `value` when exact.
    pub witness: Option<Vec<usize>>,
    pub method: DistanceMethod,
    /// Girth-based lower bound, when the matrix is column-regular with girth ≥ 6.
    pub tanner_bound: Option<usize>,
}

impl DistanceResult {
    pub fn is_exact(&self) -> bool {
        self.status == DistanceStatus::Exact
    }
}

/// Limits for the support search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Largest support size to try.
    pub max_weight: usize,
    /// Abort after visiting this many search nodes.
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_weight: 32, max_nodes: 2_000_000_000 }
    }
}

/// Dense GF(2) rows packed into 64-bit words.
#[derive(Clone, Debug)]
struct BitRows {
    width: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitRows {
    fn from_sparse(h: &SparseBitMatrix) -> Self {
        let words = h.ncols().div_ceil(64).max(1);
        let mut data = vec![0u64; words * h.nrows()];
        for (r, row) in h.rows().iter().enumerate() {
            for &c in row {
                data[r * words + c / 64] |= 1 << (c % 64);
            }
        }
        BitRows { width: h.ncols(), words, data }
    }

    fn nrows(&self) -> usize {
        self.data.len() / self.words
    }

    fn bit(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    fn xor_into(&mut self, src: usize, dst: usize) {
        let w = self.words;
        for k in 0..w {
            let v = self.data[src * w + k];
            self.data[dst * w + k] ^= v;
        }
    }

    fn swap(&mut self, a: usize, b: usize) {
        if a != b {
            let w = self.words;
            for k in 0..w {
                self.data.swap(a * w + k, b * w + k);
            }
        }
    }

    /// Reduced row echelon form in place; returns pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let nrows = self.nrows();
        for col in 0..self.width {
            let rank = pivots.len();
            if rank == nrows {
                break;
            }
            let Some(p) = (rank..nrows).find(|&r| self.bit(r, col)) else {
                continue;
            };
            self.swap(rank, p);
            for r in 0..nrows {
                if r != rank && self.bit(r, col) {
                    self.xor_into(rank, r);
                }
            }
            pivots.push(col);
        }
        pivots
    }
}

pub fn rank_gf2(h: &SparseBitMatrix) -> usize {
    // Eliminate along the shorter dimension.
    if h.nrows() > h.ncols() {
        BitRows::from_sparse(&h.transpose()).rref().len()
    } else {
        BitRows::from_sparse(h).rref().len()
    }
}

pub fn code_dimension(h: &SparseBitMatrix) -> usize {
    h.ncols() - rank_gf2(h)
}

/// A basis of the null space of `h`, each vector packed into 64-bit words.
pub fn null_space_basis(h: &SparseBitMatrix) -> Vec<Vec<u64>> {
    let mut m = BitRows::from_sparse(h);
    let pivots = m.rref();
    let words = h.ncols().div_ceil(64).max(1);
    let mut is_pivot = vec![false; h.ncols()];
    pivots.iter().for_each(|&p| is_pivot[p] = true);
    (0..h.ncols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0u64; words];
            v[f / 64] |= 1 << (f % 64);
            for (i, &p) in pivots.iter().enumerate() {
                if m.bit(i, f) {
                    v[p / 64] |= 1 << (p % 64);
                }
            }
            v
        })
        .collect()
}

fn support_of(v: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (k, &w) in v.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            out.push(k * 64 + w.trailing_zeros() as usize);
            w &= w - 1;
        }
    }
    out
}

/// Every nonzero word is visited once via a Gray code over the basis; the
/// top coefficients fix a shard so shards can run in parallel.
fn enumerate_min_weight(basis: &[Vec<u64>]) -> Option<(usize, Vec<u64>)> {
    let k = basis.len();
    if k == 0 {
        return None;
    }
    let words = basis[0].len();
    let shard_bits = k.min(6);
    let low = k - shard_bits;
    let shard_best = |shard: usize| -> Option<(usize, Vec<u64>)> {
        let mut v = vec![0u64; words];
        for b in 0..shard_bits {
            if shard >> b & 1 == 1 {
                for (x, y) in v.iter_mut().zip(&basis[low + b]) {
                    *x ^= y;
                }
            }
        }
        let mut best: Option<(usize, Vec<u64>)> = None;
        let mut consider = |v: &[u64]| {
            let w: usize = v.iter().map(|x| x.count_ones() as usize).sum();
            if w > 0 && best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, v.to_vec()));
            }
        };
        consider(&v);
        for i in 1u64..(1u64 << low) {
            let flip = i.trailing_zeros() as usize;
            for (x, y) in v.iter_mut().zip(&basis[flip]) {
                *x ^= y;
            }
            consider(&v);
        }
        best
    };
    let per_shard: Vec<Option<(usize, Vec<u64>)>> = (0..1usize << shard_bits).into_par_iter().map(shard_best).collect();
    per_shard.into_iter().flatten().min_by_key(|(w, _)| *w)
}

/// Girth-based lower bound on minimum and stopping distance for a
/// column-regular matrix: `γ + 1` at girth 6, `2γ` at girth 8.
pub fn tanner_lower_bound(girth: usize, col_weight: usize) -> Result<usize> {
    match girth {
        6 => Ok(col_weight + 1),
        8 => Ok(2 * col_weight),
        g => Err(Error::UnsupportedGirth(g)),
    }
}

fn recorded_tanner_bound(h: &SparseBitMatrix) -> Option<usize> {
    let gamma = *h.col_weights().first()?;
    if h.col_weights().iter().any(|&w| w != gamma) {
        return None;
    }
    let g = BipartiteGraph::from_matrix(h).girth().unwrap_or(usize::MAX);
    match g {
        g if g >= 8 => tanner_lower_bound(8, gamma).ok(),
        6 => tanner_lower_bound(6, gamma).ok(),
        _ => None,
    }
}

pub fn is_stopping_set(h: &SparseBitMatrix, support: &[usize]) -> bool {
    let mut hits = vec![0u32; h.nrows()];
    for &c in support {
        for &r in h.col(c) {
            hits[r] += 1;
        }
    }
    hits.iter().all(|&x| x != 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Codeword,
    StoppingSet,
}

enum SearchOutcome {
    Found(Vec<usize>),
    /// Every support of size up to the given weight was ruled out.
    Exhausted(usize),
}

struct SupportSearch<'a> {
    h: &'a SparseBitMatrix,
    target: Target,
    max_col_weight: usize,
    hits: Vec<u32>,
    chosen: Vec<usize>,
    forbidden: Vec<bool>,
    nodes: u64,
    max_nodes: u64,
}

impl<'a> SupportSearch<'a> {
    fn new(h: &'a SparseBitMatrix, target: Target, max_nodes: u64) -> Self {
        SupportSearch {
            h,
            target,
            max_col_weight: h.col_weights().into_iter().max().unwrap_or(0).max(1),
            hits: vec![0; h.nrows()],
            chosen: Vec::new(),
            forbidden: vec![false; h.ncols()],
            nodes: 0,
            max_nodes,
        }
    }

    fn unsatisfied(&self, hits: u32) -> bool {
        match self.target {
            Target::Codeword => hits % 2 == 1,
            Target::StoppingSet => hits == 1,
        }
    }

    fn push(&mut self, c: usize) {
        self.chosen.push(c);
        for &r in self.h.col(c) {
            self.hits[r] += 1;
        }
    }

    fn pop(&mut self) {
        let c = self.chosen.pop().expect("push/pop balanced");
        for &r in self.h.col(c) {
            self.hits[r] -= 1;
        }
    }

    /// Depth-first search for a qualifying superset of `chosen` of size at
    /// most `limit`. `Err(())` means the node budget ran out.
    fn extend(&mut self, limit: usize) -> std::result::Result<bool, ()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(());
        }
        // Unsatisfied rows touched by the current support, and the one with
        // the fewest admissible columns.
        let mut unsat = 0usize;
        let mut best: Option<(usize, usize)> = None;
        let mut seen_rows = Vec::new();
        for &c in &self.chosen {
            for &r in self.h.col(c) {
                if seen_rows.contains(&r) || !self.unsatisfied(self.hits[r]) {
                    continue;
                }
                seen_rows.push(r);
                unsat += 1;
                let cands = self.h.row(r).iter().filter(|&&x| !self.forbidden[x] && !self.chosen.contains(&x)).count();
                if best.is_none_or(|(_, n)| cands < n) {
                    best = Some((r, cands));
                }
            }
        }
        let Some((row, cands)) = best else {
            return Ok(true);
        };
        if cands == 0 || self.chosen.len() + unsat.div_ceil(self.max_col_weight) > limit {
            return Ok(false);
        }
        let options: Vec<usize> =
            self.h.row(row).iter().copied().filter(|&x| !self.forbidden[x] && !self.chosen.contains(&x)).collect();
        let mut result = Ok(false);
        let mut excluded = Vec::new();
        for c in options {
            self.push(c);
            let r = self.extend(limit);
            if r != Ok(false) {
                // Keep the support on the stack when found.
                if r.is_err() {
                    self.pop();
                }
                result = r;
                break;
            }
            self.pop();
            self.forbidden[c] = true;
            excluded.push(c);
        }
        for c in excluded {
            self.forbidden[c] = false;
        }
        result
    }

    /// Iterative deepening over support size; the smallest column of the
    /// support is fixed as the root at each level.
    fn run(&mut self, max_weight: usize) -> SearchOutcome {
        for w in 1..=max_weight.min(self.h.ncols()) {
            for root in 0..self.h.ncols() {
                // Columns below the root are excluded: the root is the minimum.
                for x in 0..root {
                    self.forbidden[x] = true;
                }
                self.push(root);
                let r = self.extend(w);
                if let Ok(true) = r {
                    let mut found = self.chosen.clone();
                    found.sort_unstable();
                    return SearchOutcome::Found(found);
                }
                self.pop();
                self.forbidden.iter_mut().for_each(|f| *f = false);
                if r.is_err() {
                    return SearchOutcome::Exhausted(w - 1);
                }
            }
        }
        SearchOutcome::Exhausted(max_weight.min(self.h.ncols()))
    }
}

fn search_result(h: &SparseBitMatrix, target: Target, budget: SearchBudget, tanner: Option<usize>) -> DistanceResult {
    let mut search = SupportSearch::new(h, target, budget.max_nodes);
    match search.run(budget.max_weight) {
        SearchOutcome::Found(w) => DistanceResult {
            value: Some(w.len()),
            status: DistanceStatus::Exact,
            witness: Some(w),
            method: DistanceMethod::SupportSearch,
            tanner_bound: tanner,
        },
        SearchOutcome::Exhausted(upto) if upto >= h.ncols() => DistanceResult {
            value: None,
            status: DistanceStatus::Exact,
            witness: None,
            method: DistanceMethod::SupportSearch,
            tanner_bound: tanner,
        },
        SearchOutcome::Exhausted(upto) => DistanceResult {
            value: Some((upto + 1).max(tanner.unwrap_or(0))),
            status: DistanceStatus::LowerBoundOnly,
            witness: None,
            method: DistanceMethod::SupportSearch,
            tanner_bound: tanner,
        },
    }
}

/// Minimum distance of the code with parity-check matrix `h`.
pub fn min_distance(h: &SparseBitMatrix, budget: SearchBudget) -> DistanceResult {
    let tanner = recorded_tanner_bound(h);
    let basis = null_space_basis(h);
    if basis.len() <= ENUMERATION_MAX_DIMENSION {
        let best = enumerate_min_weight(&basis);
        return DistanceResult {
            value: best.as_ref().map(|(w, _)| *w),
            status: DistanceStatus::Exact,
            witness: best.map(|(_, v)| support_of(&v)),
            method: DistanceMethod::Enumeration,
            tanner_bound: tanner,
        };
    }
    search_result(h, Target::Codeword, budget, tanner)
}

/// Smallest nonempty column set meeting every row in 0 or ≥ 2 positions.
pub fn stopping_distance(h: &SparseBitMatrix, budget: SearchBudget) -> DistanceResult {
    let tanner = recorded_tanner_bound(h);
    search_result(h, Target::StoppingSet, budget, tanner)
}

/// Certifies a distance from an explicit codeword support and a known lower
/// bound: exact when the witness meets the bound.
pub fn certify_with_witness(h: &SparseBitMatrix, witness: &[usize], lower_bound: usize) -> Result<DistanceResult> {
    if witness.is_empty() || !h.columns_sum_to_zero(witness) {
        return Err(Error::BadParameters("witness columns do not sum to zero".into()));
    }
    let exact = witness.len() == lower_bound;
    let mut w = witness.to_vec();
    w.sort_unstable();
    Ok(DistanceResult {
        value: Some(if exact { w.len() } else { lower_bound }),
        status: if exact { DistanceStatus::Exact } else { DistanceStatus::LowerBoundOnly },
        witness: Some(w),
        method: DistanceMethod::WitnessPlusBound,
        tanner_bound: Some(lower_bound),
    })
}
