use thiserror::Error;

/// Errors raised by the computational core.
///
/// Variants are split into three families that the command line maps to
/// distinct exit codes: malformed input, resource bounds, and failed
/// mathematical checks ([`Error::is_theorem_violation`]).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("enumeration limit exceeded: {what} needs {requested}, limit is {limit}")]
    EnumerationLimit { what: &'static str, requested: usize, limit: usize },

    #[error("size bound exceeded: {what} is {size}, bound is {bound}")]
    BoundExceeded { what: &'static str, size: usize, bound: usize },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("repeated leaf label {0}")]
    RepeatedLeaf(u32),

    #[error("not a permutation of the leaf set: {0}")]
    NotAPermutation(String),

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("no primes supplied for modular rank")]
    NoPrimes,

    #[error("invalid modulus {0}: must be a prime above 2^20")]
    BadPrime(u64),

    #[error("prime {prime} divides a denominator in row {row}, column {col}")]
    PrimeCollision { prime: u64, row: usize, col: usize },

    #[error("subspace is not invariant under the given matrix (row {0})")]
    NotInvariant(usize),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("theorem check failed: {0}")]
    TheoremViolation(String),
}

impl Error {
    /// True for failures that indicate a mathematical check did not hold,
    /// as opposed to bad input or exhausted bounds.
    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_) | Error::NotACharacter(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
