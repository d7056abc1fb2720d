//! Built-in consistency checks.
//!
//! `quick` covers `n <= 4`, `k <= 4`; `full` adds the `n <= 6` spectra, the
//! `Lie(5)` and `Lie(6)` dimensions, Garnir presentations up to `m = 7`
//! and `dim ρ_{3,5}`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;

use crate::characters::{decompose, induced_cyclic_character, irreducible_character, kw_multiplicity, ClassFunction};
use crate::combinatorics::{partitions, Partition};
use crate::conjecture::{conjecture_check, lie_character, whitehouse_character, Verdict};
use crate::engine::{
    catalan, character_rho, constituent_shape, dim_rho, spectrum_of, standard_brackets, EngineConfig, PhiMatrix,
    PhiMethod,
};
use crate::error::{Error, Result};
use crate::garnir::{specht_quotient, GarnirMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(Error::Parse(format!("unknown selftest level {s:?}"))),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Quick => "quick",
            Level::Full => "full",
        })
    }
}

/// Deliberate corruption used to confirm that the checks can fail.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FaultInjection {
    /// Adds 1 to the first diagonal entry of every closed-form `φ` matrix.
    pub perturb_phi_diagonal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestSummary {
    pub level: Level,
    pub checks: Vec<CheckResult>,
}

impl SelftestSummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Check<'a> = (String, Box<dyn Fn() -> Result<()> + Sync + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::TheoremViolation(msg()))
    }
}

fn closed_form_phi(n: usize, cfg: &EngineConfig, fault: FaultInjection) -> Result<PhiMatrix> {
    let mut phi = PhiMatrix::build(n, PhiMethod::ClosedForm, &cfg.limits)?;
    if fault.perturb_phi_diagonal {
        phi.matrix = phi.matrix.add_at(0, 0, &BigRational::from_integer(1.into()));
    }
    Ok(phi)
}

fn checks<'a>(level: Level, cfg: &'a EngineConfig, fault: FaultInjection) -> Vec<Check<'a>> {
    let max_n = if level == Level::Full { 6 } else { 4 };
    let max_garnir = if level == Level::Full { 7 } else { 4 };
    let mut out: Vec<Check<'a>> = Vec::new();

    out.push((
        format!("phi closed form = definition (n=2..{})", max_n.min(5)),
        Box::new(move || {
            for n in 2..=max_n.min(5) {
                let closed = closed_form_phi(n, cfg, fault)?;
                let definitional = PhiMatrix::build(n, PhiMethod::Definitional, &cfg.limits)?;
                ensure(closed == definitional, || format!("matrices differ for n={n}"))?;
            }
            Ok(())
        }),
    ));
    out.push((
        format!("dim ker phi = Catalan (n=2..{max_n})"),
        Box::new(move || {
            for n in 2..=max_n {
                let k = closed_form_phi(n, cfg, fault)?.kernel_dim();
                ensure(k == catalan(n), || format!("n={n}: kernel {k}, Catalan {}", catalan(n)))?;
            }
            Ok(())
        }),
    ));
    out.push((
        format!("phi spectrum (n=2..{max_n})"),
        Box::new(move || {
            for n in 2..=max_n {
                spectrum_of(&closed_form_phi(n, cfg, fault)?)?;
            }
            Ok(())
        }),
    ));
    out.push((
        format!("standard brackets independent (n=2..{max_n})"),
        Box::new(move || {
            for n in 2..=max_n {
                let c = standard_brackets(n, &cfg.limits)?.len();
                ensure(c == catalan(n), || format!("n={n}: {c} brackets"))?;
            }
            Ok(())
        }),
    ));
    out.push((
        "character rho(n,3) = chi^(2^(n-1),1) (n=2..4)".into(),
        Box::new(move || {
            for n in 2..=4 {
                let mut parts = vec![2; n - 1];
                parts.push(1);
                let expected = irreducible_character(&Partition::new(parts)?)?;
                ensure(character_rho(n, 3, cfg)? == expected, || format!("n={n}"))?;
            }
            Ok(())
        }),
    ));
    out.push((
        "rho(n,2) = sign (n=2..4)".into(),
        Box::new(move || {
            for n in 2..=4 {
                let chi = character_rho(n, 2, cfg)?;
                ensure(chi == ClassFunction::sign(n), || format!("n={n}"))?;
            }
            Ok(())
        }),
    ));
    let max_lie = if level == Level::Full { 6 } else { 4 };
    out.push((
        format!("dim Lie(k) = (k-1)! (k=3..{max_lie})"),
        Box::new(move || {
            for k in 3..=max_lie {
                let d = dim_rho(2, k, cfg)?.dim as u64;
                ensure(d == (1..k as u64).product::<u64>(), || format!("k={k}: {d}"))?;
            }
            Ok(())
        }),
    ));
    out.push((
        "Lie(k) oracles (k=3..4)".into(),
        Box::new(move || {
            for k in 3..=4 {
                let chi = character_rho(2, k, cfg)?;
                ensure(chi == induced_cyclic_character(k)?, || format!("k={k}: Klyachko"))?;
                for mu in partitions(k) {
                    let from_engine = decompose(&chi)?.multiplicity(&mu);
                    ensure(from_engine == kw_multiplicity(&mu, k)?, || format!("k={k}: KW at ({mu})"))?;
                }
            }
            Ok(())
        }),
    ));
    out.push((
        "W_4 = chi^(2,2)".into(),
        Box::new(move || {
            let w = whitehouse_character(3, cfg)?;
            ensure(w == irreducible_character(&"2,2".parse()?)?, || "W_4".into())
        }),
    ));
    out.push((
        format!("Garnir presentations (m<={max_garnir})"),
        Box::new(move || {
            for m in 1..=max_garnir {
                for lambda in partitions(m) {
                    for mode in [GarnirMode::Full, GarnirMode::Reduced] {
                        let r = specht_quotient(&lambda, mode, false, max_garnir)?;
                        ensure(r.matches_hook_formula(), || {
                            format!("({lambda}) {mode}: {} vs f = {}", r.quotient_dim, r.hook_dim)
                        })?;
                    }
                }
            }
            Ok(())
        }),
    ));
    out.push((
        "conjecture matches (2,3), (2,4), (3,3)".into(),
        Box::new(move || {
            for (n, k) in [(2, 3), (2, 4), (3, 3)] {
                let r = conjecture_check(n, k, false, cfg)?;
                ensure(r.verdict == Verdict::Match, || format!("({n},{k}): {}", r.verdict))?;
            }
            Ok(())
        }),
    ));
    if level == Level::Full {
        out.push((
            "eigenvalue shapes 2^i 1^(2n-1-2i) (n=2..6)".into(),
            Box::new(move || {
                for n in 2..=6 {
                    let total: u64 = (0..n).map(|i| constituent_shape(n, i).hook_dim()).sum();
                    let expected = crate::engine::v_dimension(n) as u64;
                    ensure(total == expected, || format!("n={n}: {total} vs {expected}"))?;
                }
                Ok(())
            }),
        ));
        out.push((
            "Lie(k) restriction of W_(k+1) (k=3..5)".into(),
            Box::new(move || {
                for k in 3..=5 {
                    let w = whitehouse_character(k, cfg)?;
                    ensure(w.restrict()? == lie_character(k, cfg)?, || format!("k={k}"))?;
                }
                Ok(())
            }),
        ));
        out.push((
            "rho(3,5)=1077".into(),
            Box::new(move || {
                let d = dim_rho(3, 5, cfg)?.dim;
                ensure(d == 1077, || format!("got {d}"))
            }),
        ));
    }
    out
}

/// Runs every check of `level` and collects the outcomes; a failing check
/// does not stop the others.
pub fn run_selftest(level: Level, cfg: &EngineConfig, fault: FaultInjection) -> SelftestSummary {
    let results = checks(level, cfg, fault)
        .into_iter()
        .map(|(name, f)| match f() {
            Ok(()) => CheckResult { name, passed: true, detail: String::new() },
            Err(e) => CheckResult { name, passed: false, detail: e.to_string() },
        })
        .collect();
    SelftestSummary { level, checks: results }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_passes() {
        let s = run_selftest(Level::Quick, &EngineConfig::default(), FaultInjection::default());
        let failed: Vec<_> = s.failures().collect();
        assert!(failed.is_empty(), "{failed:?}");
    }

    #[test]
    fn fault_injection_trips_the_closed_form_check() {
        let s = run_selftest(Level::Quick, &EngineConfig::default(), FaultInjection { perturb_phi_diagonal: true });
        assert!(!s.all_passed());
        let first = &s.checks[0];
        assert!(first.name.starts_with("phi closed form = definition"));
        assert!(!first.passed);
    }
}
