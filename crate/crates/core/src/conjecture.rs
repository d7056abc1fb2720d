//! Lie and Whitehouse characters, and the row-addition prediction for
//! `ρ_{n,k}`.
//!
//! The prediction takes each constituent `S^μ` of the Whitehouse module
//! `W_{k+1}`, adds `n - 2` rows of length `k - 1` on top of `μ`, and
//! restricts the result from `S_{m+1}` to `S_m` by the branching rule.

use std::fmt;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{
    decompose, induce_to_next, induced_cyclic_character, kw_multiplicity, ClassFunction, Decomposition,
};
use crate::combinatorics::{restrict_irreducible, Partition};
use crate::engine::{character_rho, decomposition_rho, dim_rho, EngineConfig};
use crate::error::{Error, Result};

/// Largest `k` accepted by [`lie_character`].
pub const MAX_LIE_K: usize = 7;

/// How a Lie character was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LieSource {
    /// Computed as `ρ_{2,k}` by the engine and matched against the
    /// Klyachko induced character.
    Engine,
    /// Engine bound exceeded; Klyachko induced character matched against
    /// the Kraskiewicz–Weyman multiplicities.
    Klyachko,
}

/// Character of `Lie(k)` together with its provenance.
pub fn lie_character_with_source(k: usize, cfg: &EngineConfig) -> Result<(ClassFunction, LieSource)> {
    if !(2..=MAX_LIE_K).contains(&k) {
        return Err(Error::BoundExceeded { what: "k for Lie(k)", size: k, bound: MAX_LIE_K });
    }
    let klyachko = induced_cyclic_character(k)?;
    let (chi, source) = match character_rho(2, k, cfg) {
        Ok(chi) => (chi, LieSource::Engine),
        Err(Error::BoundExceeded { .. } | Error::EnumerationLimit { .. }) => (klyachko.clone(), LieSource::Klyachko),
        Err(e) => return Err(e),
    };
    if chi != klyachko {
        return Err(Error::TheoremViolation(format!("engine Lie({k}) differs from the Klyachko character")));
    }
    for (shape, mult) in decompose(&chi)?.terms() {
        if kw_multiplicity(shape, k)? != *mult {
            return Err(Error::TheoremViolation(format!(
                "Lie({k}) multiplicity of S^({shape}) disagrees with the major-index count"
            )));
        }
    }
    Ok((chi, source))
}

/// Character of `Lie(k)` on `S_k`, `2 <= k <= 7`.
pub fn lie_character(k: usize, cfg: &EngineConfig) -> Result<ClassFunction> {
    lie_character_with_source(k, cfg).map(|(chi, _)| chi)
}

/// `W_{k+1} = Lie(k)↑^{S_{k+1}} - Lie(k+1)`, checked to be a genuine
/// character whose restriction to `S_k` is `Lie(k)`.
pub fn whitehouse_character(k: usize, cfg: &EngineConfig) -> Result<ClassFunction> {
    if k < 2 || k + 1 > MAX_LIE_K {
        return Err(Error::BoundExceeded { what: "k for W_{k+1}", size: k, bound: MAX_LIE_K - 1 });
    }
    let lie = lie_character(k, cfg)?;
    let w = induce_to_next(&lie).sub(&lie_character(k + 1, cfg)?)?;
    decompose(&w)?;
    if w.restrict()? != lie {
        return Err(Error::TheoremViolation(format!("W_{} does not restrict to Lie({k})", k + 1)));
    }
    Ok(w)
}

/// `((k-1)^(n-2), λ)`: `n - 2` rows of length `k - 1` placed above `λ`.
pub fn add_rows(lambda: &Partition, n: usize, k: usize) -> Result<Partition> {
    if n < 2 || k < 2 {
        return Err(Error::Invalid(format!("add_rows needs n, k >= 2, got ({n}, {k})")));
    }
    if n > 2 && lambda.row(1) > k - 1 {
        return Err(Error::Shape(format!(
            "first row of ({lambda}) is longer than {}; cannot stack rows of that length on top",
            k - 1
        )));
    }
    let mut parts = vec![k - 1; n - 2];
    parts.extend_from_slice(lambda.parts());
    Partition::new(parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    DimMatchOnly,
    Mismatch,
    EngineUnavailable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::DimMatchOnly => "dim-match-only",
            Verdict::Mismatch => "mismatch",
            Verdict::EngineUnavailable => "engine-unavailable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub engine_dim: Option<usize>,
    pub predicted_dim: u64,
    pub engine_decomposition: Option<Decomposition>,
    pub predicted_decomposition: Decomposition,
    /// Whitehouse constituents too wide for the row addition.
    pub rejected_constituents: Vec<Partition>,
    pub verdict: Verdict,
}

/// The predicted module for `ρ_{n,k}` and the Whitehouse constituents that
/// could not be extended.
pub fn predicted_decomposition(n: usize, k: usize, cfg: &EngineConfig) -> Result<(Decomposition, Vec<Partition>)> {
    let w = decompose(&whitehouse_character(k, cfg)?)?;
    let pieces: Vec<std::result::Result<Decomposition, Partition>> = w
        .terms()
        .par_iter()
        .map(|(mu, mult)| match add_rows(mu, n, k) {
            Ok(big) => {
                let restricted = restrict_irreducible(&big).expect("nonempty shape");
                Ok(Decomposition::from_terms(restricted.terms().iter().map(|(s, c)| (s.clone(), c * mult))))
            }
            Err(_) => Err(mu.clone()),
        })
        .collect();
    let mut total = Decomposition::default();
    let mut rejected = Vec::new();
    for piece in pieces {
        match piece {
            Ok(d) => total = total.merge(&d),
            Err(mu) => rejected.push(mu),
        }
    }
    Ok((total, rejected))
}

/// Compares the prediction with the engine. With `dims_only` the engine's
/// decomposition is not attempted.
pub fn conjecture_check(n: usize, k: usize, dims_only: bool, cfg: &EngineConfig) -> Result<ConjectureReport> {
    if n < 2 || k < 2 {
        return Err(Error::Invalid(format!("conjecture_check needs n, k >= 2, got ({n}, {k})")));
    }
    let m = k * n - n - k + 2;
    let (predicted, rejected) = predicted_decomposition(n, k, cfg)?;
    let unavailable = |e: &Error| matches!(e, Error::BoundExceeded { .. } | Error::EnumerationLimit { .. });
    let engine_dim = match dim_rho(n, k, cfg) {
        Ok(r) => Some(r.dim),
        Err(e) if unavailable(&e) => None,
        Err(e) => return Err(e),
    };
    let engine_decomposition = if dims_only || engine_dim.is_none() {
        None
    } else {
        match decomposition_rho(n, k, cfg) {
            Ok(d) => Some(d),
            Err(e) if unavailable(&e) => None,
            Err(e) => return Err(e),
        }
    };
    let predicted_dim = predicted.dimension();
    let verdict = match (engine_dim, &engine_decomposition) {
        _ if !rejected.is_empty() => Verdict::Mismatch,
        (None, _) => Verdict::EngineUnavailable,
        (Some(d), _) if d as u64 != predicted_dim => Verdict::Mismatch,
        (Some(_), Some(dec)) if *dec == predicted => Verdict::Match,
        (Some(_), Some(_)) => Verdict::Mismatch,
        (Some(_), None) => Verdict::DimMatchOnly,
    };
    Ok(ConjectureReport {
        n,
        k,
        m,
        engine_dim,
        predicted_dim,
        engine_decomposition,
        predicted_decomposition: predicted,
        rejected_constituents: rejected,
        verdict,
    })
}

/// Dimension of a class function as an integer.
pub fn character_dimension(chi: &ClassFunction) -> Option<u64> {
    let d: &BigRational = chi.dimension();
    d.is_integer().then(|| d.to_integer().to_u64()).flatten()
}
