//! Sparse Gaussian elimination with Markowitz pivoting.
//!
//! The pivot at each step minimises `(r - 1)(c - 1)`, where `r` is the
//! number of entries in the pivot row and `c` the number of active rows in
//! the pivot column; ties go to the smallest `(row, col)`. The search walks
//! rows and columns in order of increasing size and stops as soon as no
//! unexamined entry can beat the best candidate, so the result is the exact
//! minimum independent of the order rows were updated in.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

pub(crate) type SparseRow<E> = Vec<(usize, E)>;

/// Arithmetic needed to eliminate one entry of a row against a pivot row.
pub(crate) trait RowArith: Sync {
    type Elem: Clone + Send + Sync;

    /// Returns a row spanning the same space as `{target, pivot}` together
    /// with `pivot`, with no entry in column `col`.
    fn eliminate(
        &self,
        target: &[(usize, Self::Elem)],
        pivot: &[(usize, Self::Elem)],
        col: usize,
    ) -> SparseRow<Self::Elem>;
}

fn entry<E>(row: &[(usize, E)], col: usize) -> &E {
    let i = row.binary_search_by_key(&col, |&(c, _)| c).expect("column present in row");
    &row[i].1
}

/// Fraction-free elimination over the integers: `t ← (p/g)·t − (a/g)·pivot`
/// followed by division by the content of the new row.
pub(crate) struct IntegerArith;

impl RowArith for IntegerArith {
    type Elem = BigInt;

    fn eliminate(&self, target: &[(usize, BigInt)], pivot: &[(usize, BigInt)], col: usize) -> SparseRow<BigInt> {
        let a = entry(target, col);
        let p = entry(pivot, col);
        let g = a.gcd(p);
        let (ps, as_) = (p / &g, a / &g);
        let mut out = Vec::with_capacity(target.len() + pivot.len());
        let (mut i, mut j) = (0, 0);
        while i < target.len() || j < pivot.len() {
            let ci = target.get(i).map_or(usize::MAX, |e| e.0);
            let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
            let (c, v) = if ci < cj {
                i += 1;
                (ci, &ps * &target[i - 1].1)
            } else if cj < ci {
                j += 1;
                (cj, -(&as_ * &pivot[j - 1].1))
            } else {
                i += 1;
                j += 1;
                (ci, &ps * &target[i - 1].1 - &as_ * &pivot[j - 1].1)
            };
            if !v.is_zero() {
                out.push((c, v));
            }
        }
        let content = out.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
        if !content.is_zero() && !content.is_one() {
            for (_, v) in &mut out {
                *v = &*v / &content;
            }
        }
        if out.first().is_some_and(|(_, v)| v.is_negative()) {
            for (_, v) in &mut out {
                *v = -&*v;
            }
        }
        out
    }
}

/// Elimination modulo a word-sized prime.
pub(crate) struct ModArith {
    pub p: u64,
}

impl ModArith {
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }
}

impl RowArith for ModArith {
    type Elem = u64;

    fn eliminate(&self, target: &[(usize, u64)], pivot: &[(usize, u64)], col: usize) -> SparseRow<u64> {
        let factor = self.mul(*entry(target, col), self.inv(*entry(pivot, col)));
        let neg = self.p - factor;
        let mut out = Vec::with_capacity(target.len() + pivot.len());
        let (mut i, mut j) = (0, 0);
        while i < target.len() || j < pivot.len() {
            let ci = target.get(i).map_or(usize::MAX, |e| e.0);
            let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
            let (c, v) = if ci < cj {
                i += 1;
                (ci, target[i - 1].1)
            } else if cj < ci {
                j += 1;
                (cj, self.mul(neg, pivot[j - 1].1))
            } else {
                i += 1;
                j += 1;
                (ci, (target[i - 1].1 + self.mul(neg, pivot[j - 1].1)) % self.p)
            };
            if v != 0 {
                out.push((c, v));
            }
        }
        out
    }
}

/// Pivots in the order chosen and the fully reduced pivot rows.
pub(crate) struct Elimination<E> {
    pub pivots: Vec<(usize, usize)>,
    pub pivot_rows: Vec<SparseRow<E>>,
}

struct State<E> {
    rows: Vec<SparseRow<E>>,
    active: Vec<bool>,
    col_rows: Vec<BTreeSet<usize>>,
    row_bucket: Vec<BTreeSet<usize>>,
    col_bucket: Vec<BTreeSet<usize>>,
}

impl<E> State<E> {
    fn new(rows: Vec<SparseRow<E>>, n_cols: usize) -> Self {
        let n_rows = rows.len();
        let mut col_rows = vec![BTreeSet::new(); n_cols];
        let mut row_bucket = vec![BTreeSet::new(); n_cols + 1];
        let mut active = vec![false; n_rows];
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            active[i] = true;
            row_bucket[row.len()].insert(i);
            for &(c, _) in row {
                col_rows[c].insert(i);
            }
        }
        let mut col_bucket = vec![BTreeSet::new(); n_rows + 1];
        for (c, set) in col_rows.iter().enumerate() {
            if !set.is_empty() {
                col_bucket[set.len()].insert(c);
            }
        }
        State { rows, active, col_rows, row_bucket, col_bucket }
    }

    fn move_col(&mut self, c: usize, old: usize, new: usize) {
        if old > 0 {
            self.col_bucket[old].remove(&c);
        }
        if new > 0 {
            self.col_bucket[new].insert(c);
        }
    }

    fn add_to_col(&mut self, c: usize, r: usize) {
        let old = self.col_rows[c].len();
        self.col_rows[c].insert(r);
        self.move_col(c, old, old + 1);
    }

    fn remove_from_col(&mut self, c: usize, r: usize) {
        let old = self.col_rows[c].len();
        self.col_rows[c].remove(&r);
        self.move_col(c, old, old - 1);
    }

    fn find_pivot(&self) -> Option<(usize, usize)> {
        let max_level = self.row_bucket.len().max(self.col_bucket.len());
        let mut best: Option<(usize, usize, usize)> = None;
        for t in 1..max_level {
            if let Some(cols) = self.col_bucket.get(t) {
                for &c in cols {
                    for &r in &self.col_rows[c] {
                        let cost = (self.rows[r].len() - 1) * (t - 1);
                        let cand = (cost, r, c);
                        if best.is_none_or(|b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
            if let Some(rows) = self.row_bucket.get(t) {
                for &r in rows {
                    for &(c, _) in &self.rows[r] {
                        let cost = (t - 1) * (self.col_rows[c].len() - 1);
                        let cand = (cost, r, c);
                        if best.is_none_or(|b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
            if let Some((cost, _, _)) = best {
                if cost < t * t {
                    break;
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }
}

/// Runs elimination to completion. The output depends only on the input
/// rows, not on the rayon thread count.
pub(crate) fn eliminate<A: RowArith>(arith: &A, rows: Vec<SparseRow<A::Elem>>, n_cols: usize) -> Elimination<A::Elem> {
    let mut st = State::new(rows, n_cols);
    let mut pivots = Vec::new();
    let mut pivot_rows = Vec::new();

    while let Some((pr, pc)) = st.find_pivot() {
        let pivot_row = std::mem::take(&mut st.rows[pr]);
        st.active[pr] = false;
        st.row_bucket[pivot_row.len()].remove(&pr);
        for &(c, _) in &pivot_row {
            st.remove_from_col(c, pr);
        }

        let targets: Vec<usize> = st.col_rows[pc].iter().copied().collect();
        let updated: Vec<SparseRow<A::Elem>> = if targets.len() > 64 {
            targets
                .par_iter()
                .map(|&r| arith.eliminate(&st.rows[r], &pivot_row, pc))
                .collect()
        } else {
            targets.iter().map(|&r| arith.eliminate(&st.rows[r], &pivot_row, pc)).collect()
        };

        for (r, new_row) in targets.into_iter().zip(updated) {
            let old_row = std::mem::replace(&mut st.rows[r], new_row);
            st.row_bucket[old_row.len()].remove(&r);
            let (mut i, mut j) = (0, 0);
            let new_cols: Vec<usize> = st.rows[r].iter().map(|e| e.0).collect();
            while i < old_row.len() || j < new_cols.len() {
                let co = old_row.get(i).map_or(usize::MAX, |e| e.0);
                let cn = new_cols.get(j).copied().unwrap_or(usize::MAX);
                if co < cn {
                    st.remove_from_col(co, r);
                    i += 1;
                } else if cn < co {
                    st.add_to_col(cn, r);
                    j += 1;
                } else {
                    i += 1;
                    j += 1;
                }
            }
            if st.rows[r].is_empty() {
                st.active[r] = false;
            } else {
                st.row_bucket[st.rows[r].len()].insert(r);
            }
        }
        debug_assert!(st.col_rows[pc].is_empty());

        pivots.push((pr, pc));
        pivot_rows.push(pivot_row);
    }
    debug_assert!(st.active.iter().all(|a| !a));
    Elimination { pivots, pivot_rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_rows(rows: &[&[i64]]) -> Vec<SparseRow<BigInt>> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(c, &v)| (c, BigInt::from(v)))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn singleton_pivots_first() {
        let rows = int_rows(&[&[1, 1, 1], &[0, 2, 0], &[1, 0, 1]]);
        let e = eliminate(&IntegerArith, rows, 3);
        assert_eq!(e.pivots.len(), 2);
        assert_eq!(e.pivots[0], (1, 1));
    }

    #[test]
    fn modular_rank_drops_at_small_prime() {
        let rows: Vec<SparseRow<u64>> = vec![vec![(0, 2), (1, 1)], vec![(0, 1), (1, 3)]];
        assert_eq!(eliminate(&ModArith { p: 5 }, rows.clone(), 2).pivots.len(), 1);
        assert_eq!(eliminate(&ModArith { p: 7 }, rows, 2).pivots.len(), 2);
    }

    #[test]
    fn fraction_free_keeps_rows_primitive() {
        let out = IntegerArith.eliminate(
            &[(0, BigInt::from(4)), (1, BigInt::from(6))],
            &[(0, BigInt::from(2)), (2, BigInt::from(2))],
            0,
        );
        assert_eq!(out, vec![(1, BigInt::from(3)), (2, BigInt::from(-2))]);
    }
}
