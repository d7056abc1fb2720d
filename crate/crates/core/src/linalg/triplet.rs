//! Plain-text triplet format.
//!
//! ```text
//! rows cols nnz
//! row col numerator/denominator
//! ...
//! ```
//!
//! Indices are 0-based, entries are written in row-major order and values
//! always carry an explicit reduced denominator, so write → parse → write is
//! byte-identical.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::SparseRationalMatrix;
use crate::error::{Error, Result};

/// Largest row or column count accepted by the parser.
pub const MAX_DIMENSION: usize = 1 << 20;

pub fn write_triplets(m: &SparseRationalMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", m.n_rows(), m.n_cols(), m.nnz());
    for (r, c, v) in m.triplets() {
        let _ = writeln!(out, "{r} {c} {}/{}", v.numer(), v.denom());
    }
    out
}

pub fn parse_triplets(text: &str) -> Result<SparseRationalMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("missing header".into()))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header field {t:?}"))))
        .collect::<Result<_>>()?;
    let [n_rows, n_cols, nnz] = dims[..] else {
        return Err(Error::Parse(format!("header needs 3 fields, got {header:?}")));
    };
    if n_rows > MAX_DIMENSION || n_cols > MAX_DIMENSION {
        return Err(Error::Parse(format!("dimensions {n_rows}x{n_cols} exceed {MAX_DIMENSION}")));
    }

    let mut triplets = Vec::new();
    let mut last: Option<(usize, usize)> = None;
    for line in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [r, c, v] = fields[..] else {
            return Err(Error::Parse(format!("bad entry line {line:?}")));
        };
        let r: usize = r.parse().map_err(|_| Error::Parse(format!("bad row {r:?}")))?;
        let c: usize = c.parse().map_err(|_| Error::Parse(format!("bad column {c:?}")))?;
        if r >= n_rows || c >= n_cols {
            return Err(Error::Parse(format!("entry ({r}, {c}) outside {n_rows}x{n_cols}")));
        }
        if last.is_some_and(|prev| prev >= (r, c)) {
            return Err(Error::Parse(format!("entry ({r}, {c}) out of row-major order")));
        }
        last = Some((r, c));
        let (num, den) = v
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("value {v:?} lacks a denominator")))?;
        let num: BigInt = num.parse().map_err(|_| Error::Parse(format!("bad numerator in {v:?}")))?;
        let den: BigInt = den.parse().map_err(|_| Error::Parse(format!("bad denominator in {v:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {v:?}")));
        }
        let value = BigRational::new(num, den);
        if value.is_zero() {
            return Err(Error::Parse(format!("explicit zero at ({r}, {c})")));
        }
        triplets.push((r, c, value));
        if triplets.len() > nnz {
            return Err(Error::Parse(format!("more than {nnz} entries")));
        }
    }
    if triplets.len() != nnz {
        return Err(Error::Parse(format!("header promises {nnz} entries, found {}", triplets.len())));
    }
    SparseRationalMatrix::from_triplets(n_rows, n_cols, triplets)
}
