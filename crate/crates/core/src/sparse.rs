use crate::error::{Error, Result};

/// A 0/1 matrix stored by row and column supports.
///
/// Both views are kept in sync; every support list is strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseBitMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<usize>>,
    cols: Vec<Vec<usize>>,
}

impl SparseBitMatrix {
    /// Builds a matrix from per-row column supports in any order.
    pub fn from_rows(nrows: usize, ncols: usize, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != nrows {
            return Err(Error::DimensionMismatch { expected: nrows, found: rows.len() });
        }
        let mut cols = vec![Vec::new(); ncols];
        for (r, row) in rows.iter_mut().enumerate() {
            row.sort_unstable();
            if let Some(w) = row.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::BadParameters(format!("row {r} lists column {} twice", w[0])));
            }
            for &c in row.iter() {
                if c >= ncols {
                    return Err(Error::BadParameters(format!("row {r} has column {c} >= {ncols}")));
                }
                cols[c].push(r);
            }
        }
        Ok(SparseBitMatrix { nrows, ncols, rows, cols })
    }

    pub fn from_dense(dense: &[Vec<u8>]) -> Result<Self> {
        let ncols = dense.first().map_or(0, Vec::len);
        if let Some(bad) = dense.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch { expected: ncols, found: bad.len() });
        }
        let rows =
            dense.iter().map(|r| r.iter().enumerate().filter(|(_, &b)| b != 0).map(|(c, _)| c).collect()).collect();
        Self::from_rows(dense.len(), ncols, rows)
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseBitMatrix { nrows, ncols, rows: vec![Vec::new(); nrows], cols: vec![Vec::new(); ncols] }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, r: usize) -> &[usize] {
        &self.rows[r]
    }

    pub fn col(&self, c: usize) -> &[usize] {
        &self.cols[c]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn cols(&self) -> &[Vec<usize>] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].binary_search(&c).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn col_weights(&self) -> Vec<usize> {
        self.cols.iter().map(Vec::len).collect()
    }

    pub fn transpose(&self) -> Self {
        SparseBitMatrix { nrows: self.ncols, ncols: self.nrows, rows: self.cols.clone(), cols: self.rows.clone() }
    }

    /// Copy with entry (r, c) flipped.
    pub fn with_toggled(&self, r: usize, c: usize) -> Self {
        let mut rows = self.rows.clone();
        match rows[r].binary_search(&c) {
            Ok(i) => {
                rows[r].remove(i);
            }
            Err(i) => rows[r].insert(i, c),
        }
        Self::from_rows(self.nrows, self.ncols, rows).expect("indices stay in range")
    }

    /// Submatrix made of the listed rows, in the given order.
    pub fn select_rows(&self, which: &[usize]) -> Self {
        let rows = which.iter().map(|&r| self.rows[r].clone()).collect();
        Self::from_rows(which.len(), self.ncols, rows).expect("rows come from a valid matrix")
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|row| {
                let mut d = vec![0u8; self.ncols];
                row.iter().for_each(|&c| d[c] = 1);
                d
            })
            .collect()
    }

    /// Indices of rows with odd parity on `word` (nonzero entries count as 1).
    pub fn unsatisfied_checks(&self, word: &[u8]) -> Vec<usize> {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, row)| row.iter().filter(|&&c| word[c] & 1 == 1).count() % 2 == 1)
            .map(|(r, _)| r)
            .collect()
    }

    pub fn syndrome_ok(&self, word: &[u8]) -> bool {
        self.rows.iter().all(|row| row.iter().filter(|&&c| word[c] & 1 == 1).count() % 2 == 0)
    }

    /// True if the listed columns sum to zero over GF(2).
    pub fn columns_sum_to_zero(&self, support: &[usize]) -> bool {
        let mut parity = vec![false; self.nrows];
        for &c in support {
            for &r in &self.cols[c] {
                parity[r] ^= true;
            }
        }
        parity.iter().all(|&p| !p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_bad_supports() {
        assert!(SparseBitMatrix::from_rows(1, 3, vec![vec![0, 3]]).is_err());
        assert!(SparseBitMatrix::from_rows(1, 3, vec![vec![1, 1]]).is_err());
        assert!(SparseBitMatrix::from_rows(2, 3, vec![vec![1]]).is_err());
    }

    #[test]
    fn toggling() {
        let m = SparseBitMatrix::from_dense(&[vec![1, 0, 1], vec![0, 1, 0]]).unwrap();
        let t = m.with_toggled(1, 2);
        assert!(t.get(1, 2));
        assert_eq!(t.col(2), &[0, 1]);
        assert_eq!(t.with_toggled(1, 2), m);
    }

    proptest! {
        #[test]
        fn transpose_involution_and_views_agree(dense in prop::collection::vec(prop::collection::vec(0u8..2, 7), 1..9)) {
            let m = SparseBitMatrix::from_dense(&dense).unwrap();
            prop_assert_eq!(&m.transpose().transpose(), &m);
            prop_assert_eq!(m.to_dense(), dense);
            for (c, col) in m.cols().iter().enumerate() {
                for &r in col {
                    prop_assert!(m.get(r, c));
                }
            }
            prop_assert_eq!(m.row_weights().iter().sum::<usize>(), m.col_weights().iter().sum::<usize>());
        }
    }
}
