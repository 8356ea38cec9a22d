//! Code objects for the two symmetric-matrix families and the random
//! Gallager baseline, plus the explicit witness constructions.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::rank_gf2;
use crate::incidence::{BipartiteGraph, Incidence};
use crate::sparse::SparseBitMatrix;
use crate::symspace::SymSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Null space of H(n,q): columns are points.
    Symmetric,
    /// Null space of Hᵀ(n,q): columns are lines.
    SymmetricTranspose,
    GallagerRandom,
    /// A parity-check matrix supplied from outside, e.g. read from an alist file.
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Symmetric => "symmetric",
            Family::SymmetricTranspose => "symmetric_transpose",
            Family::GallagerRandom => "gallager_random",
            Family::Custom => "custom",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symmetric" => Ok(Family::Symmetric),
            "symmetric_transpose" => Ok(Family::SymmetricTranspose),
            "gallager_random" => Ok(Family::GallagerRandom),
            "custom" => Ok(Family::Custom),
            other => Err(Error::BadParameters(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CodeParams {
    Symmetric { n: usize, q: usize },
    Gallager { len: usize, col_wt: usize, row_wt: usize, seed: u64 },
    Custom { label: String },
}

#[derive(Clone, Debug)]
pub struct CodeSpec {
    pub family: Family,
    pub params: CodeParams,
    pub h: SparseBitMatrix,
    pub length: usize,
    pub dimension: usize,
    pub girth: Option<usize>,
    /// Point and line labels of the symmetric families.
    pub incidence: Option<Arc<Incidence>>,
}

impl CodeSpec {
    fn from_matrix(family: Family, params: CodeParams, h: SparseBitMatrix, incidence: Option<Arc<Incidence>>) -> Self {
        let length = h.ncols();
        let dimension = length - rank_gf2(&h);
        let girth = BipartiteGraph::from_matrix(&h).girth();
        CodeSpec { family, params, h, length, dimension, girth, incidence }
    }

    /// Short identifier such as `C(2,4)`, `CT(2,2)` or `R(64,3,4,s7)`.
    pub fn id(&self) -> String {
        match (self.family, &self.params) {
            (Family::Symmetric, CodeParams::Symmetric { n, q }) => format!("C({n},{q})"),
            (Family::SymmetricTranspose, CodeParams::Symmetric { n, q }) => format!("CT({n},{q})"),
            (_, CodeParams::Gallager { len, col_wt, row_wt, seed }) => format!("R({len},{col_wt},{row_wt},s{seed})"),
            (_, CodeParams::Symmetric { n, q }) => format!("{}({n},{q})", self.family),
            (_, CodeParams::Custom { label }) => label.clone(),
        }
    }

    pub fn rate(&self) -> f64 {
        self.dimension as f64 / self.length as f64
    }

    /// Wraps an arbitrary parity-check matrix (e.g. one read from disk).
    pub fn from_parity_check(h: SparseBitMatrix, label: &str) -> Self {
        Self::from_matrix(Family::Custom, CodeParams::Custom { label: label.to_string() }, h, None)
    }
}

/// Builds C(n,q) or Cᵀ(n,q).
pub fn make_code(family: Family, n: usize, q: usize) -> Result<CodeSpec> {
    let inc = Arc::new(Incidence::build(n, q)?);
    let h = match family {
        Family::Symmetric => inc.h.clone(),
        Family::SymmetricTranspose => inc.h.transpose(),
        Family::GallagerRandom | Family::Custom => {
            return Err(Error::BadParameters(format!("{family} is not a symmetric-matrix family")))
        }
    };
    Ok(CodeSpec::from_matrix(family, CodeParams::Symmetric { n, q }, h, Some(inc)))
}

/// Upper bounds on the dimensions of C(n,q) and Cᵀ(n,q):
/// `k1 ≤ q^((n²-n)/2)(q-1)^n`, `k2 ≤ r - c + q^((n²-n)/2)(q-1)^n`.
pub fn dimension_bounds(n: usize, q: usize) -> (usize, usize) {
    let core = q.pow((n * n - n) as u32 / 2) * (q - 1).pow(n as u32);
    let (r, c) = crate::incidence::h_dimensions(n, q).expect("caller checked size");
    (core, r - c + core)
}

/// Lower bound on rank H(n,q): `q^((n²-n)/2)(q^n - (q-1)^n)`.
pub fn rank_lower_bound(n: usize, q: usize) -> usize {
    q.pow((n * n - n) as u32 / 2) * (q.pow(n as u32) - (q - 1).pow(n as u32))
}

fn line_indices(inc: &Incidence, lines: impl IntoIterator<Item = crate::symspace::Line>) -> Result<Vec<usize>> {
    lines
        .into_iter()
        .map(|l| {
            inc.line_index(&l).ok_or_else(|| Error::StructureViolation(format!("line {:?} not enumerated", l.points)))
        })
        .collect()
}

/// The 2q lines `{(0 0; 0 x) + y·I11}` and `{(x 0; 0 0) + y·I22}` (top-left
/// corner). Their Hᵀ columns sum to zero since every point `diag(x, y)` in
/// the corner is covered exactly twice.
pub fn ctranspose_witness(inc: &Incidence) -> Result<Vec<usize>> {
    let s = &inc.space;
    let e11 = s.unit_diag(0);
    let e22 = s.unit_diag(1);
    let mut lines = Vec::new();
    for x in s.field().elements() {
        lines.push(s.line(&s.corner(0, 0, x)?, &e11)?);
    }
    for x in s.field().elements() {
        lines.push(s.line(&s.corner(x, 0, 0)?, &e22)?);
    }
    let mut idx = line_indices(inc, lines)?;
    idx.sort_unstable();
    Ok(idx)
}

/// The 4q points P_i, Q_i built from a primitive element α of GF(2^m):
/// `P1 = (1 0; 0 0)`, `Pi = (1 a; a a²)`, `P_{q+1} = (0 0; 0 1)`,
/// `P_{q+i} = (0 a; a a²+1)`, `Q1 = 0`, `Qi = (0 a; a a²)`,
/// `Q_{q+1} = I`, `Q_{q+i} = (1 a; a a²+1)`, with `a = α^{i-2}`, `2 ≤ i ≤ q`.
/// Every line meets the set in 0 or 2 points.
pub fn c2q_witness(space: &SymSpace) -> Result<Vec<usize>> {
    let f = space.field();
    if f.characteristic() != 2 {
        return Err(Error::BadCharacteristic(f.order()));
    }
    if space.n() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: space.n() });
    }
    let mut pts = vec![space.corner(1, 0, 0)?, space.corner(0, 0, 1)?, space.zero(), space.corner(1, 0, 1)?];
    for a in f.primitive_powers() {
        let a2 = f.mul(a, a);
        let a2p1 = f.add(a2, 1);
        pts.push(space.corner(1, a, a2)?);
        pts.push(space.corner(0, a, a2p1)?);
        pts.push(space.corner(0, a, a2)?);
        pts.push(space.corner(1, a, a2p1)?);
    }
    let mut idx: Vec<usize> = pts.iter().map(|p| space.index(p)).collect();
    idx.sort_unstable();
    Ok(idx)
}

/// Lines `ℓ(S,i) = {S + x·I_ii}` over points with `s_ii = 0` and
/// `s_jj != 0` for every `j < i`; their rows in H(n,q) are independent.
pub fn independent_row_family(inc: &Incidence) -> Result<Vec<usize>> {
    let s = &inc.space;
    let mut lines = Vec::new();
    for i in 0..s.n() {
        let dir = s.unit_diag(i);
        for p in s.points() {
            if p.get(i, i) == 0 && (0..i).all(|j| p.get(j, j) != 0) {
                lines.push(s.line(&p, &dir)?);
            }
        }
    }
    let mut idx = line_indices(inc, lines)?;
    idx.sort_unstable();
    Ok(idx)
}

/// Size of [`independent_row_family`]: `q^((n²-n)/2)(q^n - (q-1)^n)`.
pub fn independent_row_family_size(n: usize, q: usize) -> usize {
    rank_lower_bound(n, q)
}

const GALLAGER_RETRIES: usize = 1000;

/// Gallager's regular ensemble: a block-diagonal band of `len/row_wt` rows,
/// stacked with `col_wt - 1` column-permuted copies. Each permuted band is
/// re-drawn (up to a fixed number of times) while it makes two columns share
/// more than one check; the draw with the fewest such pairs is kept.
pub fn gallager_random(len: usize, col_wt: usize, row_wt: usize, seed: u64) -> Result<CodeSpec> {
    if len == 0 || col_wt == 0 || row_wt == 0 || !len.is_multiple_of(row_wt) {
        return Err(Error::BadParameters(format!(
            "Gallager ensemble needs row weight {row_wt} to divide length {len}"
        )));
    }
    let band_rows = len / row_wt;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<usize>> = (0..band_rows).map(|b| (b * row_wt..(b + 1) * row_wt).collect()).collect();
    let mut pairs: HashSet<(usize, usize)> = HashSet::new();
    let band_pairs = |band: &[Vec<usize>]| -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for row in band {
            for (i, &a) in row.iter().enumerate() {
                for &b in &row[i + 1..] {
                    out.push((a.min(b), a.max(b)));
                }
            }
        }
        out
    };
    pairs.extend(band_pairs(&rows));
    for _ in 1..col_wt {
        let mut best: Option<(usize, Vec<Vec<usize>>)> = None;
        for _ in 0..GALLAGER_RETRIES {
            let mut perm: Vec<usize> = (0..len).collect();
            perm.shuffle(&mut rng);
            let band: Vec<Vec<usize>> = (0..band_rows)
                .map(|b| {
                    let mut r: Vec<usize> = perm[b * row_wt..(b + 1) * row_wt].to_vec();
                    r.sort_unstable();
                    r
                })
                .collect();
            let clashes = band_pairs(&band).iter().filter(|p| pairs.contains(p)).count();
            if best.as_ref().is_none_or(|(c, _)| clashes < *c) {
                best = Some((clashes, band));
            }
            if clashes == 0 {
                break;
            }
        }
        let (_, band) = best.expect("at least one draw");
        pairs.extend(band_pairs(&band));
        rows.extend(band);
    }
    let h = SparseBitMatrix::from_rows(rows.len(), len, rows)?;
    Ok(CodeSpec::from_matrix(Family::GallagerRandom, CodeParams::Gallager { len, col_wt, row_wt, seed }, h, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{code_dimension, min_distance, SearchBudget};

    #[test]
    fn small_code_dimensions() {
        let c = make_code(Family::Symmetric, 2, 2).unwrap();
        assert_eq!((c.length, c.dimension), (8, 1));
        let ct = make_code(Family::SymmetricTranspose, 2, 2).unwrap();
        assert_eq!((ct.length, ct.dimension), (12, 5));
        assert_eq!(ct.id(), "CT(2,2)");
        assert_eq!(c.girth, Some(8));
        assert!(make_code(Family::GallagerRandom, 2, 2).is_err());
    }

    #[test]
    fn ctranspose_witness_small() {
        for (n, q) in [(2, 2), (2, 3), (3, 2)] {
            let inc = Incidence::build(n, q).unwrap();
            let w = ctranspose_witness(&inc).unwrap();
            assert_eq!(w.len(), 2 * q);
            assert!(inc.h.transpose().columns_sum_to_zero(&w));
        }
    }

    #[test]
    fn c2q_witness_small() {
        let s = SymSpace::with_order(2, 2).unwrap();
        assert_eq!(c2q_witness(&s).unwrap(), (0..8).collect::<Vec<_>>());
        let s3 = SymSpace::with_order(2, 3).unwrap();
        assert_eq!(c2q_witness(&s3), Err(Error::BadCharacteristic(3)));
    }

    #[test]
    fn independent_rows_small() {
        let inc = Incidence::build(2, 2).unwrap();
        let fam = independent_row_family(&inc).unwrap();
        assert_eq!(fam.len(), 6);
        assert_eq!(rank_gf2(&inc.h.select_rows(&fam)), 6);
    }

    #[test]
    fn gallager_shape_and_determinism() {
        let g = gallager_random(12, 2, 3, 5).unwrap();
        assert_eq!((g.h.nrows(), g.h.ncols()), (8, 12));
        assert!(g.h.row_weights().iter().all(|&w| w == 3));
        assert!(g.h.col_weights().iter().all(|&w| w == 2));
        let a = gallager_random(64, 3, 4, 11).unwrap();
        let b = gallager_random(64, 3, 4, 11).unwrap();
        assert_eq!(a.h, b.h);
        let c = gallager_random(80, 3, 5, 11).unwrap();
        assert_eq!((c.h.nrows(), c.h.ncols()), (48, 80));
        assert!(c.h.col_weights().iter().all(|&w| w == 3));
        assert!(c.h.row_weights().iter().all(|&w| w == 5));
        assert!(gallager_random(10, 3, 4, 0).is_err());
    }

    #[test]
    fn transpose_code_distance_small() {
        let ct = make_code(Family::SymmetricTranspose, 2, 2).unwrap();
        let d = min_distance(&ct.h, SearchBudget::default());
        assert_eq!(d.value, Some(4));
        assert_eq!(code_dimension(&ct.h), 5);
    }
}
