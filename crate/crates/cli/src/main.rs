use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lanke::characters::decompose;
use lanke::combinatorics::Partition;
use lanke::config::{OutputFormat, RunConfig};
use lanke::conjecture::conjecture_check;
use lanke::engine::{catalan, character_rho, dim_rho, jacobi_relations, phi_spectrum, standard_brackets, VSpace};
use lanke::garnir::{specht_quotient, GarnirMode};
use lanke::linalg::triplet::write_triplets;
use lanke::report::{CharacterReport, Report, ReportBody, StandardBasisReport};
use lanke::selftest::{run_selftest, FaultInjection, Level};
use lanke::Error;

/// Exact computations with n-ary antisymmetric brackets, Specht module
/// presentations and symmetric group characters.
#[derive(Parser, Debug)]
#[command(name = "lanke", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Configuration file with `key = value` lines.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format: json, csv, latex or text.
    #[arg(long, global = true)]
    format: Option<OutputFormat>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads (overrides LANKE_THREADS and the config file).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension of the multilinear component rho(n,k).
    Dim(NK),
    /// Character and irreducible decomposition of rho(n,k).
    Char(NK),
    /// Eigenvalue multiplicities of phi on V(n,3).
    PhiSpectrum(N),
    /// Standard brackets for k = 3 and their independence modulo relations.
    StandardBasis(N),
    /// Export the relation matrix of rho(n,k) in triplet format.
    Relations(NK),
    /// Specht module presentations by Garnir relations.
    #[command(subcommand)]
    Garnir(GarnirCommand),
    /// Row-addition prediction for rho(n,k).
    #[command(subcommand)]
    Conjecture(ConjectureCommand),
    /// Built-in consistency checks.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
struct NK {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Args, Debug)]
struct N {
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum GarnirCommand {
    /// Quotient dimension of M^shape by a Garnir generator set.
    Check {
        #[arg(long)]
        shape: Partition,
        /// full, reduced or full-column-only.
        #[arg(long, default_value = "full")]
        mode: GarnirMode,
        /// Instantiate generators at standard tableaux only.
        #[arg(long)]
        standard_only: bool,
        /// Largest tableau size accepted.
        #[arg(long, default_value_t = lanke::garnir::DEFAULT_GARNIR_LIMIT)]
        max_size: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ConjectureCommand {
    /// Compare the prediction with the engine.
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Skip the engine decomposition.
        #[arg(long)]
        dims_only: bool,
    },
}

#[derive(Args, Debug)]
struct SelftestArgs {
    /// quick or full.
    #[arg(long, default_value = "quick")]
    level: Level,
    /// Corrupt the phi diagonal to check that failures are reported.
    #[arg(long, hide = true)]
    inject_phi_fault: bool,
}

enum Failure {
    /// A mathematical check failed.
    Math(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_theorem_violation() {
            Failure::Math(e.to_string())
        } else {
            Failure::Other(e.to_string())
        }
    }
}

fn load_config(opts: &GlobalOpts) -> Result<RunConfig, Failure> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &opts.config {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Other(format!("cannot read config {}: {e}", path.display())))?;
        cfg = cfg.apply_text(&text)?;
    }
    cfg = cfg.apply_env(|k| std::env::var(k).ok())?;
    if let Some(t) = opts.threads {
        cfg.threads = Some(t);
    }
    if let Some(f) = opts.format {
        cfg.format = f;
    }
    if let Some(o) = &opts.output {
        cfg.output = Some(o.clone());
    }
    cfg.validate()?;
    Ok(cfg)
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), Failure> {
    match &cfg.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Other(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = load_config(&cli.global)?;
    if let Some(t) = cfg.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Other(format!("thread pool: {e}")))?;
    }
    let engine = cfg.engine_config();
    let (name, body) = match cli.command {
        Command::Dim(NK { n, k }) => ("dim", ReportBody::Dim(dim_rho(n, k, &engine)?)),
        Command::Char(NK { n, k }) => {
            let character = character_rho(n, k, &engine)?;
            let decomposition = decompose(&character)?;
            let m = character.degree();
            let report = CharacterReport { n, k, m, dim: decomposition.dimension(), decomposition, character };
            ("char", ReportBody::Character(report))
        }
        Command::PhiSpectrum(N { n }) => ("phi-spectrum", ReportBody::Spectrum(phi_spectrum(n, &engine.limits)?.into())),
        Command::StandardBasis(N { n }) => {
            let brackets = standard_brackets(n, &engine.limits)?;
            let report = StandardBasisReport {
                n,
                count: brackets.len(),
                catalan: catalan(n),
                independent: true,
                brackets: brackets.iter().map(|b| b.tree().to_string()).collect(),
            };
            ("standard-basis", ReportBody::StandardBasis(report))
        }
        Command::Relations(NK { n, k }) => {
            let space = VSpace::new(n, k, &engine.limits)?;
            let relations = jacobi_relations(&space, &engine.limits)?;
            return emit(&cfg, &write_triplets(&relations.matrix));
        }
        Command::Garnir(GarnirCommand::Check { shape, mode, standard_only, max_size }) => {
            let report = specht_quotient(&shape, mode, standard_only, max_size)?;
            // The standard-only set is an experiment: a deficit is reported, not an error.
            if !standard_only && !report.matches_hook_formula() {
                return Err(Failure::Math(format!(
                    "quotient of M^({shape}) has dimension {}, expected f = {}",
                    report.quotient_dim, report.hook_dim
                )));
            }
            ("garnir check", ReportBody::Garnir(report))
        }
        Command::Conjecture(ConjectureCommand::Check { n, k, dims_only }) => {
            ("conjecture check", ReportBody::Conjecture(conjecture_check(n, k, dims_only, &engine)?))
        }
        Command::Selftest(args) => {
            let fault = FaultInjection { perturb_phi_diagonal: args.inject_phi_fault };
            let summary = run_selftest(args.level, &engine, fault);
            for c in &summary.checks {
                if c.passed {
                    eprintln!("{}: pass", c.name);
                } else {
                    eprintln!("{}: FAIL ({})", c.name, c.detail);
                }
            }
            let failed: Vec<String> = summary.failures().map(|c| c.name.clone()).collect();
            emit(&cfg, &Report::new("selftest", ReportBody::Selftest(summary), &cfg).render(cfg.format))?;
            if !failed.is_empty() {
                return Err(Failure::Math(format!("failed checks: {}", failed.join("; "))));
            }
            return Ok(());
        }
    };
    emit(&cfg, &Report::new(name, body, &cfg).render(cfg.format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math(msg)) => {
            eprintln!("lanke: check failed: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("lanke: {msg}");
            ExitCode::from(1)
        }
    }
}
