//! The line/point incidence structure G(n,q), its matrix H(n,q) and graph
//! invariants (girth, diameter, connectivity of the point graph).

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sparse::SparseBitMatrix;
use crate::symspace::{Line, SymSpace, BFS_POINT_CAP};

/// Instances with more incidences than this are refused.
pub const EDGE_CAP: usize = 1 << 24;
/// Largest vertex count for all-pairs BFS (diameter).
pub const DIAMETER_VERTEX_CAP: usize = 1 << 20;

/// The points, lines and incidence matrix of one (n, q) instance.
/// Rows of `h` follow `lines`, columns follow point indices.
#[derive(Clone, Debug)]
pub struct Incidence {
    pub space: SymSpace,
    pub lines: Vec<Line>,
    pub h: SparseBitMatrix,
}

/// Row count r and column count c of H(n,q), from the closed forms.
pub fn h_dimensions(n: usize, q: usize) -> Option<(usize, usize)> {
    let c = q.checked_pow(u32::try_from(n * (n + 1) / 2).ok()?)?;
    let per_point = (q.checked_pow(n as u32)? - 1) / (q - 1);
    Some((per_point.checked_mul(c)? / q, c))
}

impl Incidence {
    pub fn build(n: usize, q: usize) -> Result<Self> {
        let space = SymSpace::with_order(n, q)?;
        let (r, c) = h_dimensions(n, q).ok_or_else(|| Error::TooLarge(format!("H({n},{q}) overflows")))?;
        if r.saturating_mul(q) > EDGE_CAP {
            return Err(Error::TooLarge(format!(
                "H({n},{q}) would be {r}×{c} with {} ones (cap {EDGE_CAP})",
                r.saturating_mul(q)
            )));
        }
        let lines = space.enumerate_lines()?;
        let rows = lines.iter().map(|l| l.points.clone()).collect();
        let h = SparseBitMatrix::from_rows(lines.len(), space.point_count(), rows)?;
        Ok(Incidence { space, lines, h })
    }

    pub fn line_index(&self, line: &Line) -> Option<usize> {
        self.lines.binary_search_by(|l| l.points.cmp(&line.points)).ok()
    }

    /// Index of the line containing the listed points.
    pub fn line_index_of_points(&self, a: usize, b: usize) -> Option<usize> {
        let line = self.space.line_through(&self.space.point(a), &self.space.point(b)).ok()?;
        self.line_index(&line)
    }

    /// The 8-cycle `0 ~ {xI11} ~ I11 ~ {I11 + xI22} ~ diag(1,1) ~ {I22 + xI11} ~ I22 ~ {xI22} ~ 0`
    /// embedded in the top-left corner. Returns its four points and four lines
    /// after checking every incidence against `h`.
    pub fn eight_cycle(&self) -> Result<([usize; 4], [usize; 4])> {
        let s = &self.space;
        let pts = [s.zero(), s.corner(1, 0, 0)?, s.corner(1, 0, 1)?, s.corner(0, 0, 1)?];
        let idx = pts.clone().map(|p| s.index(&p));
        let mut lines = [0usize; 4];
        for k in 0..4 {
            let l = s.line_through(&pts[k], &pts[(k + 1) % 4])?;
            lines[k] =
                self.line_index(&l).ok_or_else(|| Error::StructureViolation(format!("line {:?} missing", l.points)))?;
        }
        for k in 0..4 {
            for p in [idx[k], idx[(k + 1) % 4]] {
                if !self.h.get(lines[k], p) {
                    return Err(Error::StructureViolation(format!("line {} misses point {p}", lines[k])));
                }
            }
        }
        Ok((idx, lines))
    }
}

pub fn build_h(n: usize, q: usize) -> Result<SparseBitMatrix> {
    Ok(Incidence::build(n, q)?.h)
}

/// Regularity and overlap statistics of a parity-check matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureReport {
    pub nrows: usize,
    pub ncols: usize,
    /// Common row weight, if all rows agree.
    pub rho: Option<usize>,
    /// Common column weight, if all columns agree.
    pub gamma: Option<usize>,
    /// Largest number of ones shared by two columns.
    pub lambda_cols: usize,
    /// Largest number of ones shared by two rows.
    pub lambda_rows: usize,
    /// ρ / ncols.
    pub rho_ratio: f64,
    /// γ / nrows.
    pub gamma_ratio: f64,
    /// First pair of columns sharing two or more rows.
    pub first_col_overlap: Option<(usize, usize)>,
    /// First pair of rows sharing two or more columns.
    pub first_row_overlap: Option<(usize, usize)>,
}

impl StructureReport {
    pub fn is_regular_ldpc(&self) -> bool {
        self.rho.is_some() && self.gamma.is_some() && self.lambda_cols <= 1 && self.lambda_rows <= 1
    }
}

fn common_weight(ws: &[usize]) -> Option<usize> {
    let first = *ws.first()?;
    ws.iter().all(|&w| w == first).then_some(first)
}

/// Max overlap between distinct members of `sets`, where `through[x]` lists
/// the sets containing x, plus the first offending pair.
fn max_overlap(sets: &[Vec<usize>], through: &[Vec<usize>]) -> (usize, Option<(usize, usize)>) {
    let mut count = vec![0usize; sets.len()];
    let mut touched = Vec::new();
    let mut best = 0;
    let mut first = None;
    for (a, members) in sets.iter().enumerate() {
        for &x in members {
            for &b in &through[x] {
                if b > a {
                    if count[b] == 0 {
                        touched.push(b);
                    }
                    count[b] += 1;
                }
            }
        }
        for &b in &touched {
            best = best.max(count[b]);
            if count[b] > 1 && first.is_none() {
                first = Some((a, b));
            }
            count[b] = 0;
        }
        touched.clear();
    }
    (best, first)
}

pub fn structure_report(h: &SparseBitMatrix) -> StructureReport {
    let rho = common_weight(&h.row_weights());
    let gamma = common_weight(&h.col_weights());
    let (lambda_cols, first_col_overlap) = max_overlap(h.cols(), h.rows());
    let (lambda_rows, first_row_overlap) = max_overlap(h.rows(), h.cols());
    StructureReport {
        nrows: h.nrows(),
        ncols: h.ncols(),
        rho,
        gamma,
        lambda_cols,
        lambda_rows,
        rho_ratio: rho.map_or(f64::NAN, |r| r as f64 / h.ncols() as f64),
        gamma_ratio: gamma.map_or(f64::NAN, |g| g as f64 / h.nrows() as f64),
        first_col_overlap,
        first_row_overlap,
    }
}

/// Checks the four regular-LDPC properties expected of H(n,q).
pub fn verify_structure(h: &SparseBitMatrix, n: usize, q: usize) -> Result<StructureReport> {
    let gamma_expected = (q.pow(n as u32) - 1) / (q - 1);
    if let Some(r) = (0..h.nrows()).find(|&r| h.row(r).len() != q) {
        return Err(Error::StructureViolation(format!("row {r} has weight {} (expected {q})", h.row(r).len())));
    }
    if let Some(c) = (0..h.ncols()).find(|&c| h.col(c).len() != gamma_expected) {
        return Err(Error::StructureViolation(format!(
            "column {c} has weight {} (expected {gamma_expected})",
            h.col(c).len()
        )));
    }
    let report = structure_report(h);
    if let Some((a, b)) = report.first_col_overlap {
        return Err(Error::StructureViolation(format!("columns {a} and {b} share more than one row")));
    }
    if let Some((a, b)) = report.first_row_overlap {
        return Err(Error::StructureViolation(format!("rows {a} and {b} share more than one column")));
    }
    Ok(report)
}

/// Tanner graph of a parity-check matrix. Vertices `0..left` are rows
/// (checks, i.e. lines), `left..left+right` are columns (points).
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn from_matrix(h: &SparseBitMatrix) -> Self {
        let left = h.nrows();
        let mut adj: Vec<Vec<usize>> = h.rows().iter().map(|r| r.iter().map(|&c| c + left).collect()).collect();
        adj.extend(h.cols().iter().cloned());
        BipartiteGraph { left, right: h.ncols(), adj }
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn vertex_count(&self) -> usize {
        self.left + self.right
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.left].iter().map(Vec::len).sum()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Shortest cycle seen from `root`, not searching beyond length `limit`.
    fn shortest_cycle_from(&self, root: usize, limit: usize) -> Option<usize> {
        let nv = self.vertex_count();
        let mut dist = vec![u32::MAX; nv];
        let mut parent = vec![usize::MAX; nv];
        let mut best = limit;
        let mut found = None;
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u] as usize;
            if 2 * du + 1 >= best {
                break;
            }
            for &w in &self.adj[u] {
                if dist[w] == u32::MAX {
                    dist[w] = du as u32 + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = du + dist[w] as usize + 1;
                    if len < best {
                        best = len;
                        found = Some(len);
                    }
                }
            }
        }
        found
    }

    /// Length of the shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        (0..self.vertex_count()).into_par_iter().filter_map(|v| self.shortest_cycle_from(v, usize::MAX)).min()
    }

    fn eccentricity(&self, root: usize) -> Option<usize> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut seen = 1;
        let mut far = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    far = far.max(dist[w]);
                    seen += 1;
                    queue.push_back(w);
                }
            }
        }
        (seen == self.vertex_count()).then_some(far as usize)
    }

    /// Largest eccentricity, or `None` if the graph is disconnected.
    pub fn diameter(&self) -> Result<Option<usize>> {
        if self.vertex_count() > DIAMETER_VERTEX_CAP {
            return Err(Error::TooLarge(format!(
                "{} vertices exceed the diameter cap {DIAMETER_VERTEX_CAP}",
                self.vertex_count()
            )));
        }
        let eccs: Vec<Option<usize>> = (0..self.vertex_count()).into_par_iter().map(|v| self.eccentricity(v)).collect();
        Ok(eccs.into_iter().try_fold(0, |acc, e| e.map(|e| acc.max(e))))
    }
}

pub fn girth(g: &BipartiteGraph) -> Option<usize> {
    g.girth()
}

pub fn diameter(g: &BipartiteGraph) -> Result<Option<usize>> {
    g.diameter()
}

/// Number of connected components of the point graph Γ(n,q).
pub fn point_graph_components(n: usize, q: usize) -> Result<usize> {
    let space = SymSpace::with_order(n, q)?;
    if space.point_count() > BFS_POINT_CAP {
        return Err(Error::TooLarge(format!("{} points exceed the BFS cap", space.point_count())));
    }
    let shell = space.rank_one_points();
    let mut seen = vec![false; space.point_count()];
    let mut components = 0;
    for start in 0..space.point_count() {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let pu = space.point(u);
            for r in &shell {
                let v = space.index(&space.add(&pu, r));
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    Ok(components)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        for (n, q, r, c) in [(2, 2, 12, 8), (2, 4, 80, 64), (2, 3, 36, 27), (3, 2, 224, 64)] {
            let h = build_h(n, q).unwrap();
            assert_eq!((h.nrows(), h.ncols()), (r, c));
            assert_eq!(h_dimensions(n, q), Some((r, c)));
        }
    }

    #[test]
    fn cap_refuses_huge_instances() {
        assert!(matches!(build_h(4, 8), Err(Error::TooLarge(_))));
    }

    #[test]
    fn structure_of_small_instances() {
        let rep = verify_structure(&build_h(2, 2).unwrap(), 2, 2).unwrap();
        assert_eq!((rep.rho, rep.gamma), (Some(2), Some(3)));
        let rep = verify_structure(&build_h(2, 4).unwrap(), 2, 4).unwrap();
        assert_eq!((rep.rho, rep.gamma), (Some(4), Some(5)));
        assert!(rep.lambda_cols <= 1 && rep.lambda_rows <= 1);
    }

    #[test]
    fn flipped_bit_is_caught() {
        let h = build_h(2, 2).unwrap();
        for (r, c) in [(0, 0), (0, 5), (7, 3)] {
            assert!(matches!(verify_structure(&h.with_toggled(r, c), 2, 2), Err(Error::StructureViolation(_))));
        }
    }

    #[test]
    fn four_cycle_graph() {
        let h = SparseBitMatrix::from_dense(&[vec![1, 1], vec![1, 1]]).unwrap();
        let g = BipartiteGraph::from_matrix(&h);
        assert_eq!(g.girth(), Some(4));
        let rep = structure_report(&h);
        assert_eq!(rep.lambda_cols, 2);
        assert_eq!(rep.first_col_overlap, Some((0, 1)));
    }

    #[test]
    fn forest_has_no_girth_and_disconnected_has_no_diameter() {
        let h = SparseBitMatrix::from_dense(&[vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        let g = BipartiteGraph::from_matrix(&h);
        assert_eq!(g.girth(), None);
        assert_eq!(g.diameter().unwrap(), None);
    }

    #[test]
    fn small_girth_and_diameter() {
        let g = BipartiteGraph::from_matrix(&build_h(2, 2).unwrap());
        assert_eq!(g.girth(), Some(8));
        assert_eq!(g.diameter().unwrap(), Some(6));
        assert_eq!(g.edge_count(), 24);
    }

    #[test]
    fn eight_cycle_present() {
        for (n, q) in [(2, 2), (2, 3), (3, 2)] {
            let inc = Incidence::build(n, q).unwrap();
            let (pts, lines) = inc.eight_cycle().unwrap();
            assert_eq!(pts[0], 0);
            let mut l = lines.to_vec();
            l.sort();
            l.dedup();
            assert_eq!(l.len(), 4);
        }
    }

    #[test]
    fn components() {
        assert_eq!(point_graph_components(2, 2).unwrap(), 1);
        assert_eq!(point_graph_components(2, 3).unwrap(), 1);
        assert_eq!(point_graph_components(1, 5).unwrap(), 1);
    }
}
