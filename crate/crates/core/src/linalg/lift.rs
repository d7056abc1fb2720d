//! Exact right kernels via modular elimination and rational reconstruction.
//!
//! The kernel modulo `p` is at least as large as the rational kernel. When
//! the modular RREF kernel basis lifts to rational vectors that `m`
//! annihilates exactly, the two dimensions agree and the lifted basis is the
//! rational RREF kernel basis.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::markowitz::ModArith;
use super::modular::{reduce_mod, validate_primes, DEFAULT_PRIMES, TIEBREAK_PRIME};
use super::{rank, SparseRationalMatrix};
use crate::error::Result;

/// Largest dense working matrix (rows × columns) attempted.
pub const MAX_DENSE_ENTRIES: usize = 1 << 24;

struct ModKernel {
    pivots: Vec<usize>,
    /// `basis[j][c]`: entry `c` of the kernel vector for the `j`-th free column.
    basis: Vec<Vec<u64>>,
}

fn kernel_mod(m: &SparseRationalMatrix, p: u64) -> Result<ModKernel> {
    let arith = ModArith { p };
    let n = m.n_cols();
    let mut rows: Vec<Vec<u64>> = reduce_mod(m, p)?
        .into_iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            let mut dense = vec![0u64; n];
            for (c, v) in r {
                dense[c] = v;
            }
            dense
        })
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..n {
        let Some(found) = (next..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(next, found);
        let inv = arith.inv(rows[next][col]);
        for x in rows[next].iter_mut() {
            *x = arith.mul(*x, inv);
        }
        let pivot_row = std::mem::take(&mut rows[next]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col] == 0 {
                continue;
            }
            let f = p - row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                if y != 0 {
                    *x = (*x + f * y) % p;
                }
            }
        }
        rows[next] = pivot_row;
        pivots.push(col);
        next += 1;
    }
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let basis = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &c) in rows.iter().zip(&pivots) {
                if row[f] != 0 {
                    v[c] = p - row[f];
                }
            }
            v
        })
        .collect();
    Ok(ModKernel { pivots, basis })
}

/// The integer `v` with `|v| < 2^16` represented by every residue, if any.
fn common_small_integer(residues: &[u64], primes: &[u64]) -> Option<i64> {
    const SMALL: u64 = 1 << 16;
    let signed = |r: u64, p: u64| -> Option<i64> {
        if r < SMALL {
            Some(r as i64)
        } else if p - r < SMALL {
            Some(-((p - r) as i64))
        } else {
            None
        }
    };
    let first = signed(residues[0], primes[0])?;
    residues[1..]
        .iter()
        .zip(&primes[1..])
        .all(|(&r, &p)| signed(r, p) == Some(first))
        .then_some(first)
}

/// `a/b` with `|a|, b <= sqrt(modulus / 2)` congruent to `x`, if one exists.
pub fn rational_reconstruction(x: &BigInt, modulus: &BigInt) -> Option<BigRational> {
    let bound = (modulus / 2u32).sqrt();
    let (mut r0, mut r1) = (modulus.clone(), x.mod_floor(modulus));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1, t0, t1) = (r1, r2, t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Rational right kernel of `m` (`m·v = 0`) in RREF form, or `None` when the
/// modular computation cannot be lifted and certified.
pub fn lifted_kernel(m: &SparseRationalMatrix, primes: &[u64]) -> Result<Option<Vec<Vec<BigRational>>>> {
    validate_primes(primes)?;
    if m.n_rows().saturating_mul(m.n_cols()) > MAX_DENSE_ENTRIES {
        return Ok(None);
    }
    let kernels = primes.iter().map(|&p| kernel_mod(m, p)).collect::<Result<Vec<_>>>()?;
    if kernels.windows(2).any(|w| w[0].pivots != w[1].pivots) {
        return Ok(None);
    }
    let modulus: BigInt = primes.iter().map(|&p| BigInt::from(p)).product();
    let n = m.n_cols();
    let mut lifted = Vec::with_capacity(kernels[0].basis.len());
    for j in 0..kernels[0].basis.len() {
        let mut v = Vec::with_capacity(n);
        for c in 0..n {
            let residues: Vec<u64> = kernels.iter().map(|k| k.basis[j][c]).collect();
            if let Some(small) = common_small_integer(&residues, primes) {
                v.push(BigRational::from_integer(small.into()));
                continue;
            }
            // Chinese remaindering, one prime at a time
            let (mut x, mut q) = (BigInt::zero(), BigInt::one());
            for (&r, &p) in residues.iter().zip(primes) {
                let p_big = BigInt::from(p);
                let diff = (BigInt::from(r) - &x).mod_floor(&p_big);
                let q_inv = q.modpow(&BigInt::from(p - 2), &p_big);
                x += &q * ((diff * q_inv) % &p_big);
                q *= &p_big;
            }
            match rational_reconstruction(&x, &modulus) {
                Some(r) => v.push(r),
                None => return Ok(None),
            }
        }
        if m.mul_vec(&v).iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        lifted.push(v);
    }
    Ok(Some(lifted))
}

/// Exact `dim ker m`, using the lifted modular kernel when it certifies and
/// exact elimination otherwise.
pub fn kernel_dim(m: &SparseRationalMatrix) -> usize {
    let primes = [DEFAULT_PRIMES[0], DEFAULT_PRIMES[1], TIEBREAK_PRIME];
    match lifted_kernel(m, &primes) {
        Ok(Some(k)) => k.len(),
        _ => m.n_cols() - rank(m),
    }
}
