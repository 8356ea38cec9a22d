//! Points, lines and distances in the space of n×n symmetric matrices over GF(q).
//!
//! A point is stored by its upper triangle in row-major order
//! (s11, s12, ..., s1n, s22, ..., snn). Its canonical index reads those
//! entries as a mixed-radix number in base q with s11 least significant.
//! Lines are the maximal sets of rank 1: cosets `{S + x·D : x in GF(q)}` with
//! `rank(D) = 1`, which are exactly the maximal cliques of the point graph
//! whose edges join points at arithmetic distance 1.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldTable};

/// Largest point set that breadth-first searches will walk.
pub const BFS_POINT_CAP: usize = 1 << 22;
/// Largest point set that can be enumerated or indexed into a matrix.
pub const POINT_CAP: usize = 1 << 24;
/// Largest line set [`SymSpace::enumerate_lines`] will produce.
pub const LINE_CAP: usize = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymPoint {
    n: usize,
    entries: Vec<FieldElement>,
}

#[inline]
fn tri_offset(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * n - i * (i.saturating_sub(1)) / 2 - i + j
}

impl SymPoint {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Upper-triangular entries, row-major.
    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    /// Entry (i, j), zero-based; symmetric by construction.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[tri_offset(self.n, i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }
}

/// A maximal set of rank 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    /// Member with the smallest point index.
    pub base: usize,
    /// Rank-1 direction with leading upper-triangular entry equal to 1.
    pub dir: SymPoint,
    /// The q member indices, ascending.
    pub points: Vec<usize>,
}

impl Line {
    pub fn contains(&self, point: usize) -> bool {
        self.points.binary_search(&point).is_ok()
    }
}

/// The space S_n(F_q) together with its field.
#[derive(Clone, Debug)]
pub struct SymSpace {
    field: Arc<FieldTable>,
    n: usize,
    dim: usize,
    size: usize,
}

impl SymSpace {
    pub fn new(field: Arc<FieldTable>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParameters("matrix order must be at least 1".into()));
        }
        let dim = n * (n + 1) / 2;
        let size = u32::try_from(dim)
            .ok()
            .and_then(|d| field.order().checked_pow(d))
            .filter(|&s| s <= 1 << 48)
            .ok_or_else(|| Error::TooLarge(format!("S_{n}(F_{}) has too many points to index", field.order())))?;
        Ok(SymSpace { field, n, dim, size })
    }

    /// Convenience constructor from `n` and a prime-power `q`.
    pub fn with_order(n: usize, q: usize) -> Result<Self> {
        Self::new(Arc::new(FieldTable::with_order(q)?), n)
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<FieldTable> {
        Arc::clone(&self.field)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.field.order()
    }

    /// Number of independent entries, n(n+1)/2.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point_count(&self) -> usize {
        self.size
    }

    /// Number of lines through each point, (q^n - 1)/(q - 1).
    pub fn lines_per_point(&self) -> usize {
        let q = self.q();
        (q.pow(self.n as u32) - 1) / (q - 1)
    }

    /// Total number of lines, (q^n - 1)/(q - 1) · q^((n² + n - 2)/2).
    pub fn line_count(&self) -> usize {
        self.lines_per_point() * self.size / self.q()
    }

    fn check(&self, p: &SymPoint) -> Result<()> {
        if p.n != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: p.n });
        }
        Ok(())
    }

    pub fn zero(&self) -> SymPoint {
        SymPoint { n: self.n, entries: vec![0; self.dim] }
    }

    pub fn identity(&self) -> SymPoint {
        self.diag(&vec![1; self.n]).expect("identity has n diagonal entries")
    }

    pub fn from_entries(&self, entries: Vec<FieldElement>) -> Result<SymPoint> {
        if entries.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: entries.len() });
        }
        if let Some(&bad) = entries.iter().find(|&&e| e as usize >= self.q()) {
            return Err(Error::BadParameters(format!("{bad} is not an element of GF({})", self.q())));
        }
        Ok(SymPoint { n: self.n, entries })
    }

    /// Builds a point from full rows; the rows must describe a symmetric matrix.
    #[allow(clippy::needless_range_loop)]
    pub fn from_rows(&self, rows: &[Vec<FieldElement>]) -> Result<SymPoint> {
        if rows.len() != self.n || rows.iter().any(|r| r.len() != self.n) {
            return Err(Error::DimensionMismatch { expected: self.n, found: rows.len() });
        }
        let mut entries = Vec::with_capacity(self.dim);
        for i in 0..self.n {
            for j in i..self.n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::BadParameters(format!("entry ({i},{j}) breaks symmetry")));
                }
                entries.push(rows[i][j]);
            }
        }
        self.from_entries(entries)
    }

    pub fn diag(&self, d: &[FieldElement]) -> Result<SymPoint> {
        if d.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: d.len() });
        }
        let mut p = self.zero();
        for (i, &x) in d.iter().enumerate() {
            p.entries[tri_offset(self.n, i, i)] = x;
        }
        self.from_entries(p.entries)
    }

    /// `I_ii`: a single one on the diagonal.
    pub fn unit_diag(&self, i: usize) -> SymPoint {
        let mut p = self.zero();
        p.entries[tri_offset(self.n, i, i)] = 1;
        p
    }

    /// The 2×2 pattern `(a b; b c)` in the top-left corner, zero elsewhere.
    pub fn corner(&self, a: FieldElement, b: FieldElement, c: FieldElement) -> Result<SymPoint> {
        if self.n < 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: self.n });
        }
        let mut p = self.zero();
        p.entries[tri_offset(self.n, 0, 0)] = a;
        p.entries[tri_offset(self.n, 0, 1)] = b;
        p.entries[tri_offset(self.n, 1, 1)] = c;
        self.from_entries(p.entries)
    }

    pub fn index(&self, p: &SymPoint) -> usize {
        let q = self.q();
        p.entries.iter().rev().fold(0usize, |acc, &e| acc * q + e as usize)
    }

    pub fn point(&self, mut index: usize) -> SymPoint {
        debug_assert!(index < self.size);
        let q = self.q();
        let entries = (0..self.dim)
            .map(|_| {
                let e = (index % q) as FieldElement;
                index /= q;
                e
            })
            .collect();
        SymPoint { n: self.n, entries }
    }

    pub fn points(&self) -> impl Iterator<Item = SymPoint> + '_ {
        (0..self.size).map(move |i| self.point(i))
    }

    pub fn add(&self, a: &SymPoint, b: &SymPoint) -> SymPoint {
        let f = &self.field;
        let entries = a.entries.iter().zip(&b.entries).map(|(&x, &y)| f.add(x, y)).collect();
        SymPoint { n: self.n, entries }
    }

    pub fn sub(&self, a: &SymPoint, b: &SymPoint) -> SymPoint {
        let f = &self.field;
        let entries = a.entries.iter().zip(&b.entries).map(|(&x, &y)| f.sub(x, y)).collect();
        SymPoint { n: self.n, entries }
    }

    pub fn scale(&self, x: FieldElement, a: &SymPoint) -> SymPoint {
        let entries = a.entries.iter().map(|&e| self.field.mul(x, e)).collect();
        SymPoint { n: self.n, entries }
    }

    /// Rank over GF(q) of the full symmetric matrix.
    pub fn rank(&self, a: &SymPoint) -> usize {
        rank_of_rows(&self.field, a.to_rows())
    }

    pub fn arithmetic_distance(&self, a: &SymPoint, b: &SymPoint) -> Result<usize> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.rank(&self.sub(a, b)))
    }

    /// Nonzero with zero diagonal, in characteristic 2.
    pub fn is_alternate(&self, a: &SymPoint) -> bool {
        self.field.characteristic() == 2 && !a.is_zero() && (0..self.n).all(|i| a.get(i, i) == 0)
    }

    /// All rank-1 points, built by the leading-diagonal case split: the first
    /// nonzero row k has `s_kk = a != 0` and free entries `b_j` (j > k), which
    /// force `s_ij = a^{-1} b_i b_j`.
    pub fn rank_one_points(&self) -> Vec<SymPoint> {
        let q = self.q();
        let mut out = Vec::with_capacity(q.pow(self.n as u32) - 1);
        for a in 1..q as FieldElement {
            out.extend(self.rank_one_with_lead(a));
        }
        out.sort_by_key(|p| self.index(p));
        out
    }

    /// Rank-1 directions normalized so that the leading entry is 1.
    pub fn line_directions(&self) -> Vec<SymPoint> {
        self.rank_one_with_lead(1)
    }

    fn rank_one_with_lead(&self, a: FieldElement) -> Vec<SymPoint> {
        let f = &self.field;
        let q = self.q();
        let a_inv = f.inv(a).expect("lead is nonzero");
        let mut out = Vec::new();
        for k in 0..self.n {
            let free = self.n - 1 - k;
            for code in 0..q.pow(free as u32) {
                // b[k] = a, b[j] for j > k from the digits of `code`.
                let mut b = vec![0 as FieldElement; self.n];
                b[k] = a;
                let mut c = code;
                for slot in b.iter_mut().skip(k + 1) {
                    *slot = (c % q) as FieldElement;
                    c /= q;
                }
                let mut p = self.zero();
                for i in k..self.n {
                    for j in i..self.n {
                        p.entries[tri_offset(self.n, i, j)] = f.mul(a_inv, f.mul(b[i], b[j]));
                    }
                }
                out.push(p);
            }
        }
        out
    }

    /// Breadth-first distances in the point graph from `from`; `None` marks
    /// unreachable points.
    pub fn bfs_distances(&self, from: &SymPoint) -> Result<Vec<Option<u32>>> {
        self.check(from)?;
        if self.size > BFS_POINT_CAP {
            return Err(Error::TooLarge(format!("{} points exceed the BFS cap {BFS_POINT_CAP}", self.size)));
        }
        let shell = self.rank_one_points();
        let mut dist = vec![None; self.size];
        let start = self.index(from);
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            let pu = self.point(u);
            for r in &shell {
                let v = self.index(&self.add(&pu, r));
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// Shortest-path length between two points in the point graph.
    pub fn graph_distance(&self, a: &SymPoint, b: &SymPoint) -> Result<Option<usize>> {
        self.check(b)?;
        let dist = self.bfs_distances(a)?;
        Ok(dist[self.index(b)].map(|d| d as usize))
    }

    /// Point indices at graph distance in `(0, delta]` from `s`, ascending.
    pub fn deleted_neighbourhood(&self, s: &SymPoint, delta: usize) -> Result<Vec<usize>> {
        self.check(s)?;
        if delta == 0 {
            return Err(Error::BadParameters("delta must be at least 1".into()));
        }
        let shell = self.rank_one_points();
        let start = self.index(s);
        let mut seen = HashSet::from([start]);
        let mut frontier = vec![s.clone()];
        for _ in 0..delta {
            let mut next = Vec::new();
            for p in &frontier {
                for r in &shell {
                    let v = self.add(p, r);
                    if seen.insert(self.index(&v)) {
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        seen.remove(&start);
        let mut out: Vec<usize> = seen.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Intersection of the rank-1 shells `U(S)` over `set`.
    pub fn common_deleted_neighbourhood(&self, set: &[SymPoint]) -> Result<Vec<usize>> {
        let (first, rest) = set.split_first().ok_or(Error::EmptyInput)?;
        let mut common = self.deleted_neighbourhood(first, 1)?;
        for s in rest {
            let other: HashSet<usize> = self.deleted_neighbourhood(s, 1)?.into_iter().collect();
            common.retain(|p| other.contains(p));
        }
        Ok(common)
    }

    /// The line `{base + x·dir}`; `dir` must have rank 1.
    pub fn line(&self, base: &SymPoint, dir: &SymPoint) -> Result<Line> {
        self.check(base)?;
        self.check(dir)?;
        let rank = self.rank(dir);
        if rank != 1 {
            return Err(Error::NotAdjacent { rank });
        }
        let lead = *dir.entries.iter().find(|&&e| e != 0).expect("rank 1 is nonzero");
        let dir = self.scale(self.field.inv(lead)?, dir);
        let mut points: Vec<usize> =
            self.field.elements().map(|x| self.index(&self.add(base, &self.scale(x, &dir)))).collect();
        points.sort_unstable();
        Ok(Line { base: points[0], dir, points })
    }

    /// The unique line containing two adjacent points.
    pub fn line_through(&self, a: &SymPoint, b: &SymPoint) -> Result<Line> {
        self.check(a)?;
        self.check(b)?;
        self.line(b, &self.sub(a, b))
    }

    /// Every line exactly once, ordered lexicographically by member list.
    pub fn enumerate_lines(&self) -> Result<Vec<Line>> {
        if self.size > POINT_CAP || self.line_count() > LINE_CAP {
            return Err(Error::TooLarge(format!(
                "S_{}(F_{}) has {} points and {} lines",
                self.n,
                self.q(),
                self.size,
                self.line_count()
            )));
        }
        let q = self.q();
        let mut lines = Vec::with_capacity(self.line_count());
        let mut covered = vec![false; self.size];
        for dir in self.line_directions() {
            covered.iter_mut().for_each(|c| *c = false);
            let multiples: Vec<SymPoint> = self.field.elements().map(|x| self.scale(x, &dir)).collect();
            for start in 0..self.size {
                if covered[start] {
                    continue;
                }
                let s = self.point(start);
                let mut points = Vec::with_capacity(q);
                for m in &multiples {
                    let v = self.index(&self.add(&s, m));
                    covered[v] = true;
                    points.push(v);
                }
                points.sort_unstable();
                lines.push(Line { base: points[0], dir: dir.clone(), points });
            }
        }
        lines.sort_by(|a, b| a.points.cmp(&b.points));
        Ok(lines)
    }

    /// The motion `X ↦ PᵀXP + T`.
    pub fn motion_apply(&self, g: &Motion, s: &SymPoint) -> Result<SymPoint> {
        self.check(s)?;
        self.check(&g.translation)?;
        if g.p.len() != self.n * self.n {
            return Err(Error::DimensionMismatch { expected: self.n * self.n, found: g.p.len() });
        }
        let f = &self.field;
        let n = self.n;
        // sp = S·P
        let mut sp = vec![0 as FieldElement; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc = f.add(acc, f.mul(s.get(i, k), g.p[k * n + j]));
                }
                sp[i * n + j] = acc;
            }
        }
        let mut out = self.zero();
        for i in 0..n {
            for j in i..n {
                let mut acc = 0;
                for k in 0..n {
                    acc = f.add(acc, f.mul(g.p[k * n + i], sp[k * n + j]));
                }
                out.entries[tri_offset(n, i, j)] = acc;
            }
        }
        Ok(self.add(&out, &g.translation))
    }
}

/// Rank over GF(q) by Gaussian elimination.
pub fn rank_of_rows(f: &FieldTable, mut rows: Vec<Vec<FieldElement>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = f.inv(rows[rank][col]).expect("pivot is nonzero");
        let pivot_row: Vec<FieldElement> = rows[rank].iter().map(|&x| f.mul(inv, x)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(factor, pv));
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// An element of the motion group: `X ↦ PᵀXP + T` with `P` invertible.
#[derive(Clone, Debug)]
pub struct Motion {
    p: Vec<FieldElement>,
    translation: SymPoint,
}

impl Motion {
    /// `p` is row-major n×n and must be invertible over the space's field.
    pub fn new(space: &SymSpace, p: Vec<FieldElement>, translation: SymPoint) -> Result<Self> {
        let n = space.n();
        if p.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: p.len() });
        }
        space.check(&translation)?;
        let rows: Vec<Vec<FieldElement>> = p.chunks(n).map(<[_]>::to_vec).collect();
        if rank_of_rows(space.field(), rows) != n {
            return Err(Error::BadParameters("motion matrix is singular".into()));
        }
        Ok(Motion { p, translation })
    }

    pub fn identity(space: &SymSpace) -> Self {
        let n = space.n();
        let p = (0..n * n).map(|k| FieldElement::from(k / n == k % n)).collect();
        Motion { p, translation: space.zero() }
    }

    pub fn translation(space: &SymSpace, t: SymPoint) -> Self {
        Motion { translation: t, ..Motion::identity(space) }
    }

    /// Uniform random invertible `P` and uniform translation.
    pub fn random<R: Rng + ?Sized>(space: &SymSpace, rng: &mut R) -> Self {
        let n = space.n();
        let q = space.q();
        loop {
            let p: Vec<FieldElement> = (0..n * n).map(|_| rng.random_range(0..q) as FieldElement).collect();
            let t = space.point(rng.random_range(0..space.point_count()));
            if let Ok(m) = Motion::new(space, p, t) {
                return m;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: usize, q: usize) -> SymSpace {
        SymSpace::with_order(n, q).unwrap()
    }

    #[test]
    fn index_round_trip() {
        for (n, q) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
            let s = sp(n, q);
            for i in 0..s.point_count() {
                assert_eq!(s.index(&s.point(i)), i);
            }
        }
    }

    #[test]
    fn index_is_s11_least_significant() {
        let s = sp(2, 3);
        let p = s.from_rows(&[vec![2, 1], vec![1, 0]]).unwrap();
        assert_eq!(s.index(&p), 2 + 3);
        assert!(s.from_rows(&[vec![0, 1], vec![2, 0]]).is_err());
    }

    #[test]
    fn small_ranks() {
        let s = sp(2, 2);
        assert_eq!(s.rank(&s.zero()), 0);
        assert_eq!(s.rank(&s.unit_diag(0)), 1);
        let anti = s.corner(0, 1, 0).unwrap();
        assert_eq!(s.rank(&anti), 2);
        assert_eq!(s.arithmetic_distance(&s.zero(), &anti).unwrap(), 2);
        assert_eq!(s.arithmetic_distance(&anti, &anti).unwrap(), 0);
        let other = sp(3, 2);
        assert!(matches!(s.arithmetic_distance(&s.zero(), &other.zero()), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn graph_distance_examples() {
        let s = sp(2, 2);
        let anti = s.corner(0, 1, 0).unwrap();
        assert_eq!(s.graph_distance(&s.zero(), &anti).unwrap(), Some(3));
        assert_eq!(s.graph_distance(&anti, &anti).unwrap(), Some(0));
        let s3 = sp(2, 3);
        let i2 = s3.identity();
        assert_eq!(s3.graph_distance(&s3.zero(), &i2).unwrap(), Some(2));
    }

    #[test]
    fn shell_sizes() {
        assert_eq!(sp(2, 2).deleted_neighbourhood(&sp(2, 2).zero(), 1).unwrap().len(), 3);
        assert_eq!(sp(2, 4).deleted_neighbourhood(&sp(2, 4).zero(), 1).unwrap().len(), 15);
        assert_eq!(sp(3, 2).deleted_neighbourhood(&sp(3, 2).zero(), 1).unwrap().len(), 7);
        let s = sp(2, 2);
        // In S_2(F_2) everything lies within distance 3.
        assert_eq!(s.deleted_neighbourhood(&s.zero(), 3).unwrap().len(), 7);
        assert!(s.deleted_neighbourhood(&s.zero(), 0).is_err());
    }

    #[test]
    fn common_neighbourhood_examples() {
        let s = sp(2, 4);
        let z = s.zero();
        assert_eq!(s.common_deleted_neighbourhood(&[z.clone(), s.identity()]).unwrap().len(), 4);
        let anti = s.corner(0, 1, 0).unwrap();
        assert!(s.common_deleted_neighbourhood(&[z.clone(), anti]).unwrap().is_empty());
        assert_eq!(
            s.common_deleted_neighbourhood(std::slice::from_ref(&z)).unwrap(),
            s.deleted_neighbourhood(&z, 1).unwrap()
        );
        assert_eq!(s.common_deleted_neighbourhood(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn line_through_is_canonical() {
        let s = sp(2, 2);
        let z = s.zero();
        let e = s.unit_diag(0);
        let l1 = s.line_through(&z, &e).unwrap();
        assert_eq!(l1.points, vec![0, 1]);
        assert_eq!(l1, s.line_through(&e, &z).unwrap());
        assert_eq!(s.line_through(&z, &s.identity()), Err(Error::NotAdjacent { rank: 2 }));
        let s4 = sp(2, 4);
        let l = s4.line(&s4.identity(), &s4.corner(1, 2, 3).unwrap()).unwrap();
        for &a in &l.points {
            for &b in &l.points {
                if a != b {
                    assert_eq!(s4.line_through(&s4.point(a), &s4.point(b)).unwrap(), l);
                }
            }
        }
    }

    #[test]
    fn line_counts() {
        assert_eq!(sp(2, 2).enumerate_lines().unwrap().len(), 12);
        assert_eq!(sp(2, 4).enumerate_lines().unwrap().len(), 80);
        assert_eq!(sp(3, 2).enumerate_lines().unwrap().len(), 224);
    }

    #[test]
    fn rank_one_construction_matches_filter() {
        for (n, q) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
            let s = sp(n, q);
            let built: Vec<usize> = s.rank_one_points().iter().map(|p| s.index(p)).collect();
            let filtered: Vec<usize> = (0..s.point_count()).filter(|&i| s.rank(&s.point(i)) == 1).collect();
            assert_eq!(built, filtered, "n={n} q={q}");
            assert_eq!(s.line_directions().len(), s.lines_per_point());
        }
    }

    #[test]
    fn motions() {
        let s = sp(2, 4);
        let p = s.corner(1, 3, 2).unwrap();
        assert_eq!(s.motion_apply(&Motion::identity(&s), &p).unwrap(), p);
        let t = s.corner(2, 1, 1).unwrap();
        assert_eq!(s.motion_apply(&Motion::translation(&s, t.clone()), &s.zero()).unwrap(), t);
        assert!(Motion::new(&s, vec![1, 1, 1, 1], s.zero()).is_err());
    }
}
