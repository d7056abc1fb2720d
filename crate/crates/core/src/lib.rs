//! Exact computations for free `n`-ary Lie algebras (LAnKes).
//!
//! The crate builds the multilinear component `ρ_{n,k}` of the free LAnKe
//! from bracketed permutations modulo antisymmetry and the generalized
//! Jacobi identity, and checks it against symmetric-group representation
//! theory: hook lengths, Murnaghan–Nakayama characters, Specht module
//! presentations by Garnir relations, and the classical descriptions of
//! `Lie(k)`.
//!
//! All arithmetic is exact. Large rank computations can run modulo word-size
//! primes, with exact elimination as the fallback.

pub mod bracket;
pub mod characters;
pub mod combinatorics;
pub mod config;
pub mod conjecture;
pub mod engine;
pub mod error;
pub mod garnir;
pub mod linalg;
pub mod perm;
pub mod report;
pub mod selftest;

pub use error::{Error, Result};
