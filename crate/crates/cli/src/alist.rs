//! The alist sparse-matrix format.
//!
//! ```text
//! N M
//! max_col_wt max_row_wt
//! <N column weights>
//! <M row weights>
//! <N lines: 1-based row indices of each column, 0-padded to max_col_wt>
//! <M lines: 1-based column indices of each row, 0-padded to max_row_wt>
//! ```
//!
//! N counts columns (variable nodes) and M rows (check nodes).

use std::fmt::Write as _;
use std::path::Path;

use symldpc::SparseBitMatrix;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlistError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

fn parse_err(line: usize, msg: impl Into<String>) -> AlistError {
    AlistError::Parse { line, msg: msg.into() }
}

pub fn write_alist(h: &SparseBitMatrix) -> String {
    let col_w = h.col_weights();
    let row_w = h.row_weights();
    let max_col = col_w.iter().copied().max().unwrap_or(0);
    let max_row = row_w.iter().copied().max().unwrap_or(0);
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let padded = |support: &[usize], width: usize| {
        let mut v: Vec<usize> = support.iter().map(|&i| i + 1).collect();
        v.resize(width, 0);
        join(&v)
    };
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", h.ncols(), h.nrows());
    let _ = writeln!(out, "{max_col} {max_row}");
    let _ = writeln!(out, "{}", join(&col_w));
    let _ = writeln!(out, "{}", join(&row_w));
    for c in 0..h.ncols() {
        let _ = writeln!(out, "{}", padded(h.col(c), max_col));
    }
    for r in 0..h.nrows() {
        let _ = writeln!(out, "{}", padded(h.row(r), max_row));
    }
    out
}

/// Reads an alist document. The column and row sections must describe the
/// same matrix; weights and padding are checked against the header.
pub fn read_alist(text: &str) -> Result<SparseBitMatrix, AlistError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());
    let mut next = |what: &str| -> Result<(usize, Vec<usize>), AlistError> {
        let (no, line) = lines.next().ok_or_else(|| parse_err(text.lines().count() + 1, format!("missing {what}")))?;
        let nums = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(no, format!("bad integer {t:?} in {what}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((no, nums))
    };
    let expect_len = |no: usize, v: &[usize], n: usize, what: &str| {
        if v.len() == n {
            Ok(())
        } else {
            Err(parse_err(no, format!("{what}: expected {n} values, found {}", v.len())))
        }
    };

    let (no, dims) = next("dimensions")?;
    expect_len(no, &dims, 2, "dimensions")?;
    let (ncols, nrows) = (dims[0], dims[1]);
    let (no, maxes) = next("maximum weights")?;
    expect_len(no, &maxes, 2, "maximum weights")?;
    let (max_col, max_row) = (maxes[0], maxes[1]);
    let (no, col_w) = next("column weights")?;
    expect_len(no, &col_w, ncols, "column weights")?;
    if col_w.iter().any(|&w| w > max_col) {
        return Err(parse_err(no, "column weight exceeds the stated maximum"));
    }
    let (no, row_w) = next("row weights")?;
    expect_len(no, &row_w, nrows, "row weights")?;
    if row_w.iter().any(|&w| w > max_row) {
        return Err(parse_err(no, "row weight exceeds the stated maximum"));
    }

    let mut section = |count: usize, width: usize, weights: &[usize], bound: usize, what: &str| {
        let mut out = Vec::with_capacity(count);
        for (k, &w) in weights.iter().enumerate().take(count) {
            // A section of width zero is written as blank lines, which the
            // reader skips, so there is nothing to consume.
            if width == 0 {
                out.push((0, Vec::new()));
                continue;
            }
            let (no, v) = next(what)?;
            expect_len(no, &v, width, what)?;
            if v[..w].iter().any(|&i| i == 0 || i > bound) || v[w..].iter().any(|&i| i != 0) {
                return Err(parse_err(
                    no,
                    format!("{what} {}: indices must be {w} values in 1..={bound} then zeros", k + 1),
                ));
            }
            let mut s: Vec<usize> = v[..w].iter().map(|&i| i - 1).collect();
            s.sort_unstable();
            if s.windows(2).any(|p| p[0] == p[1]) {
                return Err(parse_err(no, format!("{what} {}: repeated index", k + 1)));
            }
            out.push((no, s));
        }
        Ok::<_, AlistError>(out)
    };
    let cols = section(ncols, max_col, &col_w, nrows, "column")?;
    let rows = section(nrows, max_row, &row_w, ncols, "row")?;

    let h = SparseBitMatrix::from_rows(nrows, ncols, rows.iter().map(|(_, s)| s.clone()).collect())
        .map_err(|e| parse_err(rows.first().map_or(1, |r| r.0), e.to_string()))?;
    for (c, (no, support)) in cols.iter().enumerate() {
        if h.col(c) != support.as_slice() {
            return Err(parse_err(*no, format!("column {} disagrees with the row section", c + 1)));
        }
    }
    Ok(h)
}

pub fn read_alist_file(path: &Path) -> Result<SparseBitMatrix, AlistError> {
    read_alist(&std::fs::read_to_string(path)?)
}
