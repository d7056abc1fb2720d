//! Rank modulo word-sized primes, and the policy that combines modular and
//! exact rank computations.
//!
//! Reduction mod `p` can only lose rank, so the largest rank over several
//! primes is a certified lower bound for the rational rank.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::markowitz::{eliminate, ModArith, SparseRow};
use super::{rank, SparseRationalMatrix};
use crate::error::{Error, Result};

/// The two fixed 31-bit primes used by default, and the prime consulted
/// when they disagree.
pub const DEFAULT_PRIMES: [u64; 2] = [2_147_483_647, 2_147_483_629];
pub const TIEBREAK_PRIME: u64 = 2_147_483_587;

const MIN_PRIME: u64 = 1 << 20;

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Checks a modulus list: nonempty, pairwise distinct primes in `(2^20, 2^32)`.
pub fn validate_primes(primes: &[u64]) -> Result<()> {
    if primes.is_empty() {
        return Err(Error::NoPrimes);
    }
    for (i, &p) in primes.iter().enumerate() {
        if p <= MIN_PRIME || p >= 1 << 32 || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        if primes[..i].contains(&p) {
            return Err(Error::Invalid(format!("prime {p} listed twice")));
        }
    }
    Ok(())
}

pub(crate) fn reduce_mod(m: &SparseRationalMatrix, p: u64) -> Result<Vec<SparseRow<u64>>> {
    let arith = ModArith { p };
    let big_p = BigInt::from(p);
    let residue = |x: &BigInt| -> u64 {
        let r = x % &big_p;
        let r = if r < BigInt::zero() { r + &big_p } else { r };
        r.to_u64().expect("residue fits")
    };
    let mut rows = Vec::with_capacity(m.n_rows());
    for (r, row) in m.rows().iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (c, v) in row {
            let den = residue(v.denom());
            if den == 0 {
                return Err(Error::PrimeCollision { prime: p, row: r, col: *c });
            }
            let val = arith.mul(residue(v.numer()), arith.inv(den));
            if val != 0 {
                out.push((*c, val));
            }
        }
        rows.push(out);
    }
    Ok(rows)
}

/// Rank of `m` reduced modulo a single prime.
pub fn rank_mod(m: &SparseRationalMatrix, p: u64) -> Result<usize> {
    validate_primes(&[p])?;
    let rows = reduce_mod(m, p)?;
    Ok(eliminate(&ModArith { p }, rows, m.n_cols()).pivots.len())
}

/// Outcome of a multi-prime rank computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularRank {
    /// Maximum rank over the primes; a lower bound on the rational rank.
    pub rank: usize,
    pub per_prime: Vec<(u64, usize)>,
    /// At least two primes attained the maximum.
    pub confident: bool,
}

impl ModularRank {
    /// The primes disagree, or only one was consulted.
    pub fn needs_escalation(&self) -> bool {
        !self.confident
    }
}

pub fn modular_rank(m: &SparseRationalMatrix, primes: &[u64]) -> Result<ModularRank> {
    validate_primes(primes)?;
    let per_prime = primes
        .iter()
        .map(|&p| rank_mod(m, p).map(|r| (p, r)))
        .collect::<Result<Vec<_>>>()?;
    let rank = per_prime.iter().map(|&(_, r)| r).max().unwrap_or(0);
    let confident = per_prime.iter().filter(|&&(_, r)| r == rank).count() >= 2;
    Ok(ModularRank { rank, per_prime, confident })
}

/// How a rank was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    Exact,
    Modular,
    ModularThenExact,
}

/// Chooses between exact and modular rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankPolicy {
    pub primes: Vec<u64>,
    /// Matrices with at most this many columns go straight to exact rank.
    pub exact_max_cols: usize,
    /// Always confirm a modular answer with exact elimination.
    pub verify_exact: bool,
}

impl Default for RankPolicy {
    fn default() -> Self {
        RankPolicy { primes: DEFAULT_PRIMES.to_vec(), exact_max_cols: 2000, verify_exact: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rank: usize,
    pub method: RankMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modular: Option<ModularRank>,
}

impl RankPolicy {
    /// Exact rank for small matrices; otherwise the configured primes, a
    /// tie-break prime on disagreement, and exact elimination as the last
    /// resort (or always, with `verify_exact`).
    pub fn rank(&self, m: &SparseRationalMatrix) -> Result<RankReport> {
        if m.n_cols() <= self.exact_max_cols {
            return Ok(RankReport { rank: rank(m), method: RankMethod::Exact, modular: None });
        }
        let mut modular = modular_rank(m, &self.primes)?;
        if modular.needs_escalation() && !self.primes.contains(&TIEBREAK_PRIME) {
            let mut primes = self.primes.clone();
            primes.push(TIEBREAK_PRIME);
            modular = modular_rank(m, &primes)?;
        }
        if modular.needs_escalation() || self.verify_exact {
            let exact = rank(m);
            if exact < modular.rank {
                return Err(Error::TheoremViolation(format!(
                    "exact rank {exact} below modular lower bound {}",
                    modular.rank
                )));
            }
            return Ok(RankReport { rank: exact, method: RankMethod::ModularThenExact, modular: Some(modular) });
        }
        Ok(RankReport { rank: modular.rank, method: RankMethod::Modular, modular: Some(modular) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn default_primes_are_prime() {
        for p in DEFAULT_PRIMES.iter().chain([&TIEBREAK_PRIME]) {
            assert!(is_prime(*p), "{p}");
        }
        assert!(!is_prime(2_147_483_649));
        assert!(!is_prime(1));
        assert!(is_prime(2));
    }

    #[test]
    fn identity_rank() {
        let r = modular_rank(&SparseRationalMatrix::identity(4), &DEFAULT_PRIMES).unwrap();
        assert_eq!(r.rank, 4);
        assert!(r.confident);
        let single = modular_rank(&SparseRationalMatrix::identity(4), &DEFAULT_PRIMES[..1]).unwrap();
        assert!(single.needs_escalation());
    }

    #[test]
    fn prime_validation() {
        let id = SparseRationalMatrix::identity(2);
        assert_eq!(modular_rank(&id, &[]), Err(Error::NoPrimes));
        assert_eq!(modular_rank(&id, &[101]), Err(Error::BadPrime(101)));
        assert_eq!(modular_rank(&id, &[2_147_483_648]), Err(Error::BadPrime(2_147_483_648)));
        assert!(matches!(modular_rank(&id, &[2_147_483_647, 2_147_483_647]), Err(Error::Invalid(_))));
    }

    #[test]
    fn denominator_collision() {
        let p = DEFAULT_PRIMES[0];
        let m = SparseRationalMatrix::from_triplets(
            1,
            1,
            [(0, 0, BigRational::new(1.into(), BigInt::from(p)))],
        )
        .unwrap();
        assert_eq!(
            modular_rank(&m, &DEFAULT_PRIMES),
            Err(Error::PrimeCollision { prime: p, row: 0, col: 0 })
        );
    }

    #[test]
    fn rank_drop_triggers_escalation() {
        // determinant p0 * (something): singular mod p0 only
        let p = DEFAULT_PRIMES[0] as i64;
        let m = SparseRationalMatrix::from_dense(&[vec![p, 0], vec![0, 1]]);
        let r = modular_rank(&m, &DEFAULT_PRIMES).unwrap();
        assert_eq!(r.per_prime, vec![(DEFAULT_PRIMES[0], 1), (DEFAULT_PRIMES[1], 2)]);
        assert_eq!(r.rank, 2);
        assert!(!r.confident);
        let policy = RankPolicy { exact_max_cols: 0, ..RankPolicy::default() };
        let report = policy.rank(&m).unwrap();
        assert_eq!(report.rank, 2);
        assert_eq!(report.method, RankMethod::Modular);
        assert_eq!(report.modular.unwrap().per_prime.len(), 3);
    }
}
