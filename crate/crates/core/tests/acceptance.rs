//! Acceptance criteria, run sequentially so that the timing bounds are not
//! distorted by other tests. Each criterion prints one PASS/FAIL line.

use std::io::Write;
use std::time::{Duration, Instant};

use lanke::characters::{
    decompose, induced_cyclic_character, irreducible_character, kw_multiplicity, ClassFunction,
};
use lanke::combinatorics::{partitions, Partition};
use lanke::conjecture::{conjecture_check, lie_character, predicted_decomposition, whitehouse_character, Verdict};
use lanke::engine::{
    catalan, character_rho, constituent_shape, dim_rho, phi_spectrum, standard_brackets, v_dimension, EngineConfig,
    PhiMatrix, PhiMethod,
};
use lanke::garnir::{specht_quotient, GarnirMode};
use lanke::linalg::RankMethod;

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(cond: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok: cond, detail: detail.into() }
}

fn shape(s: &str) -> Partition {
    s.parse().unwrap()
}

fn run(id: usize, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome, failures: &mut Vec<String>) {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let ok = outcome.ok && in_time;
    let bound = limit.map(|l| format!(", limit {:.0?}", l)).unwrap_or_default();
    let line = format!(
        "criterion {id:>2} {name}: {} ({}; {:.2?}{bound})",
        if ok { "PASS" } else { "FAIL" },
        outcome.detail,
        elapsed
    );
    let _ = writeln!(std::io::stderr(), "{line}");
    if !ok {
        failures.push(line);
    }
}

#[test]
fn acceptance_criteria() {
    let cfg = EngineConfig::default();
    let mut failures = Vec::new();

    run(1, "kernel of phi has Catalan dimension", Some(Duration::from_secs(10)), || {
        let dims: Vec<usize> = (2..=6)
            .map(|n| PhiMatrix::build(n, PhiMethod::Definitional, &cfg.limits).unwrap().kernel_dim())
            .collect();
        let expected: Vec<usize> = (2..=6).map(catalan).collect();
        check(dims == expected && expected[4] == 132, format!("n=2..6 kernels {dims:?}"))
    }, &mut failures);

    run(2, "phi spectrum", Some(Duration::from_secs(30)), || {
        let mut ok = true;
        let mut sums = Vec::new();
        for n in 2..=6 {
            match phi_spectrum(n, &cfg.limits) {
                Ok(s) => {
                    let total: usize = s.eigenspaces.iter().map(|e| e.multiplicity).sum();
                    ok &= total == v_dimension(n);
                    ok &= s.eigenspaces.iter().all(|e| {
                        e.shape == constituent_shape(n, e.i) && e.multiplicity as u64 == e.shape.hook_dim()
                    });
                    sums.push(total);
                }
                Err(_) => ok = false,
            }
        }
        check(ok, format!("eigenspace totals {sums:?}"))
    }, &mut failures);

    run(3, "closed form equals definition", None, || {
        let same = (2..=5).all(|n| {
            PhiMatrix::build(n, PhiMethod::ClosedForm, &cfg.limits).unwrap()
                == PhiMatrix::build(n, PhiMethod::Definitional, &cfg.limits).unwrap()
        });
        check(same, "n=2..5")
    }, &mut failures);

    run(4, "Lie(k) dimensions", Some(Duration::from_secs(60)), || {
        let dims: Vec<usize> = (3..=6).map(|k| dim_rho(2, k, &cfg).unwrap().dim).collect();
        check(dims == [2, 6, 24, 120], format!("k=3..6 dims {dims:?}"))
    }, &mut failures);

    run(5, "rho(n,2) is the sign representation", None, || {
        let ok = (2..=6).all(|n| {
            dim_rho(n, 2, &cfg).unwrap().dim == 1 && character_rho(n, 2, &cfg).unwrap() == ClassFunction::sign(n)
        });
        check(ok, "n=2..6")
    }, &mut failures);

    run(6, "character of rho(n,3)", None, || {
        let ok = (2..=4).all(|n| {
            let mut parts = vec![2; n - 1];
            parts.push(1);
            character_rho(n, 3, &cfg).unwrap() == irreducible_character(&Partition::new(parts).unwrap()).unwrap()
        });
        check(ok, "n=2..4 against chi^(2^(n-1),1)")
    }, &mut failures);

    let mut engine_35 = None;
    run(7, "dim rho(3,5)", Some(Duration::from_secs(600)), || {
        let r = dim_rho(3, 5, &cfg).unwrap();
        engine_35 = Some(r.dim);
        let agree = r.rank.method == RankMethod::Modular
            && r.rank.modular.as_ref().is_some_and(|m| m.confident && m.per_prime.iter().all(|&(_, x)| x == m.rank));
        check(r.dim == 1077 && agree, format!("dim {} via {:?}", r.dim, r.rank.modular.map(|m| m.per_prime)))
    }, &mut failures);

    run(8, "standard basis", None, || {
        let counts: Vec<usize> = (2..=6).map(|n| standard_brackets(n, &cfg.limits).map(|b| b.len()).unwrap_or(0)).collect();
        let expected: Vec<usize> = (2..=6).map(catalan).collect();
        check(counts == expected, format!("independent counts {counts:?}"))
    }, &mut failures);

    run(9, "Garnir presentations", None, || {
        let mut checked = Vec::new();
        let mut bad = Vec::new();
        for m in 1..=7 {
            for lambda in partitions(m) {
                for mode in [GarnirMode::Full, GarnirMode::Reduced] {
                    let r = specht_quotient(&lambda, mode, false, 7).unwrap();
                    if !r.matches_hook_formula() {
                        bad.push(format!("({lambda}) {mode}"));
                    }
                }
                checked.push(lambda);
            }
        }
        let named = ["2,1", "2,2,1", "3,2,1", "3,3,1"].iter().all(|s| checked.contains(&shape(s)));
        check(bad.is_empty() && named, format!("{} shapes, failures {bad:?}", checked.len()))
    }, &mut failures);

    run(10, "Klyachko and Kraskiewicz-Weyman oracles", None, || {
        let ok = (3..=6).all(|k| {
            let engine = character_rho(2, k, &cfg).unwrap();
            let d = decompose(&engine).unwrap();
            decompose(&induced_cyclic_character(k).unwrap()).unwrap() == d
                && partitions(k).iter().all(|mu| kw_multiplicity(mu, k).unwrap() == d.multiplicity(mu))
        });
        check(ok, "k=3..6")
    }, &mut failures);

    run(11, "Whitehouse module", None, || {
        let w4 = whitehouse_character(3, &cfg).unwrap() == irreducible_character(&shape("2,2")).unwrap();
        let restriction = (3..=5).all(|k| {
            whitehouse_character(k, &cfg).unwrap().restrict().unwrap() == lie_character(k, &cfg).unwrap()
        });
        check(w4 && restriction, format!("W_4 = chi^(2,2): {w4}; restrictions k=3..5: {restriction}"))
    }, &mut failures);

    run(12, "conjecture pipeline", None, || {
        let verdicts: Vec<Verdict> = [(2, 3), (2, 4), (3, 3)]
            .iter()
            .map(|&(n, k)| conjecture_check(n, k, false, &cfg).unwrap().verdict)
            .collect();
        let predicted = predicted_decomposition(3, 5, &cfg).unwrap().0.dimension();
        let r34 = conjecture_check(3, 4, false, &cfg).unwrap();
        let _ = writeln!(
            std::io::stderr(),
            "    (3,4) report: engine dim {:?}, predicted dim {}, verdict {}",
            r34.engine_dim,
            r34.predicted_dim,
            r34.verdict
        );
        let ok = verdicts.iter().all(|v| *v == Verdict::Match)
            && predicted == 1077
            && engine_35 == Some(predicted as usize);
        check(ok, format!("verdicts {verdicts:?}; predicted (3,5) {predicted}, engine {engine_35:?}"))
    }, &mut failures);

    assert!(failures.is_empty(), "failed criteria:\n{}", failures.join("\n"));
}
