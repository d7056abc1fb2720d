//! Exact sparse linear algebra over the rationals.
//!
//! Rank computations run a fraction-free Markowitz elimination on integer
//! rows (see [`markowitz`]); reduced row echelon forms are then assembled
//! from the independent rows with exact rational arithmetic. A modular path
//! ([`modular`]) handles matrices too large for the rational route.

mod markowitz;
mod lift;
pub mod modular;
pub mod triplet;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use markowitz::{eliminate, IntegerArith, SparseRow};

pub use lift::{kernel_dim, lifted_kernel, rational_reconstruction};
pub use modular::{modular_rank, ModularRank, RankMethod, RankPolicy, RankReport, DEFAULT_PRIMES};

/// A sparse vector: `(index, value)` pairs sorted by index, no zeros.
pub type SparseVector = Vec<(usize, BigRational)>;

/// A sparse matrix of exact rationals, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    n_cols: usize,
    rows: Vec<SparseVector>,
}

impl SparseRationalMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        SparseRationalMatrix { n_cols, rows: vec![Vec::new(); n_rows] }
    }

    pub fn empty(n_cols: usize) -> Self {
        SparseRationalMatrix { n_cols, rows: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        SparseRationalMatrix {
            n_cols: n,
            rows: (0..n).map(|i| vec![(i, BigRational::one())]).collect(),
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions
    /// are summed and zeros dropped.
    pub fn from_triplets(
        n_rows: usize,
        n_cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, BigRational)>,
    ) -> Result<Self> {
        let mut rows: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); n_rows];
        for (r, c, v) in triplets {
            if r >= n_rows || c >= n_cols {
                return Err(Error::Invalid(format!("entry ({r}, {c}) outside {n_rows}x{n_cols}")));
            }
            *rows[r].entry(c).or_insert_with(BigRational::zero) += v;
        }
        Ok(SparseRationalMatrix {
            n_cols,
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        })
    }

    /// Builds a matrix from dense integer rows.
    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut m = SparseRationalMatrix::empty(n_cols);
        for r in rows {
            assert_eq!(r.len(), n_cols, "ragged dense matrix");
            m.push_row(
                r.iter()
                    .enumerate()
                    .map(|(c, &v)| (c, BigRational::from_integer(v.into())))
                    .collect(),
            )
            .expect("indices in range");
        }
        m
    }

    /// Appends a row given as unsorted `(col, value)` pairs.
    pub fn push_row(&mut self, entries: Vec<(usize, BigRational)>) -> Result<()> {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (c, v) in entries {
            if c >= self.n_cols {
                return Err(Error::Invalid(format!("column {c} outside width {}", self.n_cols)));
            }
            *acc.entry(c).or_insert_with(BigRational::zero) += v;
        }
        self.rows.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        Ok(())
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, r: usize) -> &[(usize, BigRational)] {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> BigRational {
        self.rows[r]
            .binary_search_by_key(&c, |e| e.0)
            .map_or_else(|_| BigRational::zero(), |i| self.rows[r][i].1.clone())
    }

    /// Entries in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> SparseRationalMatrix {
        let mut rows = vec![Vec::new(); self.n_cols];
        for (r, c, v) in self.triplets() {
            rows[c].push((r, v.clone()));
        }
        SparseRationalMatrix { n_cols: self.n_rows(), rows }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &SparseRationalMatrix) -> Result<SparseRationalMatrix> {
        if self.n_cols != other.n_cols {
            return Err(Error::Invalid(format!("width mismatch {} vs {}", self.n_cols, other.n_cols)));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(SparseRationalMatrix { n_cols: self.n_cols, rows })
    }

    /// `M · v` for a dense column vector.
    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.n_cols);
        self.rows
            .iter()
            .map(|row| row.iter().fold(BigRational::zero(), |acc, (c, x)| acc + x * &v[*c]))
            .collect()
    }

    /// `v · M` for a sparse row vector.
    pub fn row_times(&self, v: &[(usize, BigRational)]) -> SparseVector {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (r, x) in v {
            for (c, y) in &self.rows[*r] {
                *acc.entry(*c).or_insert_with(BigRational::zero) += x * y;
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &SparseRationalMatrix) -> Result<SparseRationalMatrix> {
        if self.n_cols != other.n_rows() {
            return Err(Error::Invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.n_rows(),
                self.n_cols,
                other.n_rows(),
                other.n_cols
            )));
        }
        Ok(SparseRationalMatrix {
            n_cols: other.n_cols,
            rows: self.rows.iter().map(|r| other.row_times(r)).collect(),
        })
    }

    /// `self - c·I` for a square matrix.
    pub fn shift_diagonal(&self, c: &BigRational) -> SparseRationalMatrix {
        assert_eq!(self.n_rows(), self.n_cols, "shift needs a square matrix");
        let mut out = SparseRationalMatrix::empty(self.n_cols);
        for (i, row) in self.rows.iter().enumerate() {
            let mut entries = row.clone();
            entries.push((i, -c.clone()));
            out.push_row(entries).expect("in range");
        }
        out
    }

    /// Copy of `self` with `c` added to entry `(r, col)`.
    pub fn add_at(&self, r: usize, col: usize, c: &BigRational) -> SparseRationalMatrix {
        let mut out = self.clone();
        let row = &mut out.rows[r];
        match row.binary_search_by_key(&col, |e| e.0) {
            Ok(i) => {
                row[i].1 += c;
                if row[i].1.is_zero() {
                    row.remove(i);
                }
            }
            Err(i) if !c.is_zero() => row.insert(i, (col, c.clone())),
            Err(_) => {}
        }
        out
    }

    pub fn trace(&self) -> BigRational {
        (0..self.n_rows().min(self.n_cols)).map(|i| self.get(i, i)).sum()
    }

    /// Rows scaled to primitive integer vectors (same row space).
    fn integer_rows(&self) -> Vec<SparseRow<BigInt>> {
        self.rows.iter().map(|r| integer_row(r)).collect()
    }
}

impl fmt::Display for SparseRationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n_rows() {
            let cells: Vec<String> = (0..self.n_cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

fn integer_row(row: &[(usize, BigRational)]) -> SparseRow<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let ints: Vec<(usize, BigInt)> = row
        .iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if content.is_zero() || content.is_one() {
        ints
    } else {
        ints.into_iter().map(|(c, v)| (c, v / &content)).collect()
    }
}

/// A matrix in reduced row echelon form.
///
/// Every row has a leading 1 in its pivot column and every pivot column is
/// zero outside its own row; rows are sorted by pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonForm {
    n_cols: usize,
    rows: Vec<SparseVector>,
    pivots: Vec<usize>,
}

impl EchelonForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn to_matrix(&self) -> SparseRationalMatrix {
        SparseRationalMatrix { n_cols: self.n_cols, rows: self.rows.clone() }
    }

    /// Reduces `v` against the pivot rows; the result is zero exactly when
    /// `v` lies in the row space.
    pub fn reduce(&self, v: &[(usize, BigRational)]) -> SparseVector {
        let mut acc: BTreeMap<usize, BigRational> = v.iter().cloned().collect();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let Some(coef) = acc.get(&p).cloned() else { continue };
            for (c, x) in row {
                let e = acc.entry(*c).or_insert_with(BigRational::zero);
                *e -= &coef * x;
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }

    pub fn contains(&self, v: &[(usize, BigRational)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of a row-space vector in the echelon basis: the entries of
    /// `v` at the pivot columns.
    pub fn coordinates(&self, v: &[(usize, BigRational)]) -> Vec<BigRational> {
        let lookup: BTreeMap<usize, &BigRational> = v.iter().map(|(c, x)| (*c, x)).collect();
        self.pivots
            .iter()
            .map(|p| lookup.get(p).map_or_else(BigRational::zero, |x| (*x).clone()))
            .collect()
    }
}

/// Incrementally maintained reduced echelon basis.
struct RrefBuilder {
    rows: BTreeMap<usize, SparseVector>,
}

impl RrefBuilder {
    fn insert(&mut self, v: SparseVector) {
        let mut acc: BTreeMap<usize, BigRational> = v.into_iter().collect();
        for (p, row) in &self.rows {
            let Some(coef) = acc.get(p).cloned() else { continue };
            for (c, x) in row {
                let e = acc.entry(*c).or_insert_with(BigRational::zero);
                *e -= &coef * x;
            }
        }
        let mut reduced: SparseVector = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        let Some((lead, lead_val)) = reduced.first().cloned() else { return };
        let inv = lead_val.recip();
        for (_, x) in &mut reduced {
            *x *= &inv;
        }
        for row in self.rows.values_mut() {
            let Ok(i) = row.binary_search_by_key(&lead, |e| e.0) else { continue };
            let coef = row[i].1.clone();
            let mut acc: BTreeMap<usize, BigRational> = std::mem::take(row).into_iter().collect();
            for (c, x) in &reduced {
                let e = acc.entry(*c).or_insert_with(BigRational::zero);
                *e -= &coef * x;
            }
            *row = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        }
        self.rows.insert(lead, reduced);
    }
}

/// Rank over the rationals.
pub fn rank(m: &SparseRationalMatrix) -> usize {
    eliminate(&IntegerArith, m.integer_rows(), m.n_cols).pivots.len()
}

/// Reduced row echelon form. The echelon form of a row space is unique, so
/// the output is deterministic regardless of the pivot sequence used.
pub fn rref(m: &SparseRationalMatrix) -> EchelonForm {
    let elim = eliminate(&IntegerArith, m.integer_rows(), m.n_cols);
    let mut builder = RrefBuilder { rows: BTreeMap::new() };
    let mut independent = elim.pivot_rows;
    independent.sort_by_key(|r| r.first().map(|e| e.0));
    for row in independent {
        builder.insert(
            row.into_iter()
                .map(|(c, v)| (c, BigRational::from_integer(v)))
                .collect(),
        );
    }
    debug_assert_eq!(builder.rows.len(), elim.pivots.len());
    let (pivots, rows) = builder.rows.into_iter().unzip();
    EchelonForm { n_cols: m.n_cols, rows, pivots }
}

/// A basis of `{v : M v = 0}`, one vector per non-pivot column.
pub fn kernel_basis(m: &SparseRationalMatrix) -> Vec<Vec<BigRational>> {
    kernel_from_echelon(&rref(m))
}

pub fn kernel_from_echelon(e: &EchelonForm) -> Vec<Vec<BigRational>> {
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; e.n_cols];
        for &p in &e.pivots {
            v[p] = true;
        }
        v
    };
    (0..e.n_cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigRational::zero(); e.n_cols];
            v[f] = BigRational::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                if let Ok(i) = row.binary_search_by_key(&f, |x| x.0) {
                    v[p] = -row[i].1.clone();
                }
            }
            v
        })
        .collect()
}

/// Trace of `g` restricted to the row space of `subspace`, where `g` acts on
/// row vectors from the right (`v ↦ v·g`). Fails when the row space is not
/// mapped into itself.
pub fn restricted_trace(g: &SparseRationalMatrix, subspace: &EchelonForm) -> Result<BigRational> {
    if g.n_rows() != subspace.n_cols || g.n_cols != subspace.n_cols {
        return Err(Error::Invalid(format!(
            "{}x{} matrix cannot act on a subspace of dimension-{} space",
            g.n_rows(),
            g.n_cols,
            subspace.n_cols
        )));
    }
    let mut trace = BigRational::zero();
    for (i, (row, &p)) in subspace.rows.iter().zip(&subspace.pivots).enumerate() {
        let image = g.row_times(row);
        if !subspace.contains(&image) {
            return Err(Error::NotInvariant(i));
        }
        if let Ok(j) = image.binary_search_by_key(&p, |e| e.0) {
            trace += &image[j].1;
        }
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rref_examples() {
        let z = SparseRationalMatrix::zeros(3, 4);
        assert_eq!(rref(&z).rank(), 0);
        let id = SparseRationalMatrix::identity(3);
        let e = rref(&id);
        assert_eq!(e.pivot_columns(), &[0, 1, 2]);
        assert_eq!(e.to_matrix(), id);
        let phi2 = SparseRationalMatrix::from_dense(&[vec![1, -1, 1], vec![-1, 1, -1], vec![1, -1, 1]]);
        let e = rref(&phi2);
        assert_eq!(e.rank(), 1);
        assert_eq!(e.rows()[0], vec![(0, q(1)), (1, q(-1)), (2, q(1))]);
    }

    #[test]
    fn rref_leading_entries_and_fractions() {
        let m = SparseRationalMatrix::from_dense(&[vec![0, 2, 4, 1], vec![0, 3, 6, 0], vec![1, 1, 1, 1]]);
        let e = rref(&m);
        assert_eq!(e.pivot_columns(), &[0, 1, 3]);
        assert_eq!(e.rows()[1], vec![(1, q(1)), (2, q(2))]);
        assert_eq!(rref(&e.to_matrix()), e);
    }

    #[test]
    fn kernel_examples() {
        let phi2 = SparseRationalMatrix::from_dense(&[vec![1, -1, 1], vec![-1, 1, -1], vec![1, -1, 1]]);
        let ker = kernel_basis(&phi2);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(phi2.mul_vec(v).iter().all(Zero::is_zero));
        }
        assert!(kernel_basis(&SparseRationalMatrix::identity(4)).is_empty());
    }

    #[test]
    fn restricted_trace_examples() {
        let id = SparseRationalMatrix::identity(3);
        let sub = rref(&SparseRationalMatrix::from_dense(&[vec![1, 2, 0], vec![0, 1, 1]]));
        assert_eq!(restricted_trace(&id, &sub).unwrap(), q(2));

        // the relation v12 - v13 + v23 under the transposition (1 2):
        // v12 -> -v12, v13 -> v23, v23 -> v13
        let g = SparseRationalMatrix::from_dense(&[vec![-1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]);
        let rel = rref(&SparseRationalMatrix::from_dense(&[vec![1, -1, 1]]));
        assert_eq!(restricted_trace(&g, &rel).unwrap(), q(-1));

        let cycle = SparseRationalMatrix::from_dense(&[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
        let zero = rref(&SparseRationalMatrix::zeros(0, 3));
        assert_eq!(restricted_trace(&cycle, &zero).unwrap(), q(0));

        let not_inv = rref(&SparseRationalMatrix::from_dense(&[vec![1, 0, 0]]));
        assert!(matches!(restricted_trace(&cycle, &not_inv), Err(Error::NotInvariant(0))));
    }

    #[test]
    fn triplet_sums_and_bounds() {
        let m = SparseRationalMatrix::from_triplets(2, 2, [(0, 0, q(1)), (0, 0, q(-1)), (1, 1, q(3))]).unwrap();
        assert_eq!(m.nnz(), 1);
        assert!(SparseRationalMatrix::from_triplets(2, 2, [(2, 0, q(1))]).is_err());
    }

    #[test]
    fn products() {
        let a = SparseRationalMatrix::from_dense(&[vec![1, 2], vec![0, 1]]);
        let b = SparseRationalMatrix::from_dense(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), SparseRationalMatrix::from_dense(&[vec![2, 1], vec![1, 0]]));
        assert_eq!(a.trace(), q(2));
        assert_eq!(a.shift_diagonal(&q(1)).trace(), q(0));
    }
}
