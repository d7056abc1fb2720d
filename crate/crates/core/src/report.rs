//! Reports and their JSON, CSV, LaTeX and plain-text renderings.
//!
//! Every report carries the [`RunConfig`] that produced it. JSON output is
//! a pure function of the report, so repeated runs with the same
//! configuration are byte-identical.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::characters::{rational_string, ClassFunction, Decomposition};
use crate::combinatorics::{partitions, Partition};
use crate::config::{OutputFormat, RunConfig};
use crate::conjecture::ConjectureReport;
use crate::engine::{DimReport, Eigenspace, Spectrum};
use crate::garnir::SpechtReport;
use crate::selftest::SelftestSummary;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterReport {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub dim: u64,
    pub decomposition: Decomposition,
    pub character: ClassFunction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    /// Eigenvalue → multiplicity.
    pub spectrum: BTreeMap<i64, usize>,
    pub eigenspaces: Vec<Eigenspace>,
}

impl From<Spectrum> for SpectrumReport {
    fn from(s: Spectrum) -> Self {
        SpectrumReport { n: s.n, spectrum: s.to_map(), eigenspaces: s.eigenspaces }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardBasisReport {
    pub n: usize,
    pub count: usize,
    pub catalan: usize,
    pub independent: bool,
    pub brackets: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum ReportBody {
    Dim(DimReport),
    Character(CharacterReport),
    Spectrum(SpectrumReport),
    StandardBasis(StandardBasisReport),
    Garnir(SpechtReport),
    Conjecture(ConjectureReport),
    Selftest(SelftestSummary),
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(flatten)]
    pub body: ReportBody,
    pub config: RunConfig,
}

/// A cell of a rendered table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Text(String),
    Shape(Partition),
    Sum(Decomposition),
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Shape(p) => format!("({p})"),
            Cell::Sum(d) => d.to_string(),
        }
    }

    fn latex(&self) -> String {
        match self {
            Cell::Text(s) => latex_escape(s),
            Cell::Shape(p) => format!("${}$", latex_partition(p)),
            Cell::Sum(d) => format!("${}$", latex_decomposition(d)),
        }
    }
}

fn text<T: ToString>(v: T) -> Cell {
    Cell::Text(v.to_string())
}

/// Partition in exponent notation: `(2,2,1)` → `2^{2}1`. Parts are
/// separated by commas when any part has more than one digit.
pub fn latex_partition(p: &Partition) -> String {
    if p.is_empty() {
        return "\\emptyset".into();
    }
    let sep = if p.parts().iter().any(|&x| x >= 10) { "," } else { "" };
    let mut groups = Vec::new();
    let parts = p.parts();
    let mut i = 0;
    while i < parts.len() {
        let j = parts[i..].iter().take_while(|&&x| x == parts[i]).count();
        groups.push(if j > 1 { format!("{}^{{{j}}}", parts[i]) } else { parts[i].to_string() });
        i += j;
    }
    groups.join(sep)
}

/// `S^{3} + 2 S^{2^{2}1}`.
pub fn latex_decomposition(d: &Decomposition) -> String {
    if d.terms().is_empty() {
        return "0".into();
    }
    d.terms()
        .iter()
        .map(|(p, m)| {
            let s = format!("S^{{{}}}", latex_partition(p));
            if *m == 1 { s } else { format!("{m} {s}") }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '_' | '%' | '&' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            _ => out.push(ch),
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn opt<T: ToString>(v: &Option<T>) -> Cell {
    match v {
        Some(x) => text(x.to_string()),
        None => text("unavailable"),
    }
}

impl ReportBody {
    /// Key/value rows shared by the CSV, LaTeX and text renderings.
    pub fn rows(&self) -> Vec<(String, Cell)> {
        let mut rows: Vec<(String, Cell)> = Vec::new();
        let mut push = |k: &str, v: Cell| rows.push((k.to_string(), v));
        match self {
            ReportBody::Dim(r) => {
                push("n", text(r.n));
                push("k", text(r.k));
                push("m", text(r.m));
                push("basis_size", text(r.basis_size));
                push("relation_rows", text(r.relation_rows));
                push("relation_rank", text(r.relation_rank));
                push("rank_method", text(serde_json::to_value(r.rank.method).unwrap().as_str().unwrap_or("")));
                if let Some(m) = &r.rank.modular {
                    for (p, rank) in &m.per_prime {
                        push(&format!("rank_mod_{p}"), text(rank));
                    }
                }
                push("dim", text(r.dim));
            }
            ReportBody::Character(r) => {
                push("n", text(r.n));
                push("k", text(r.k));
                push("m", text(r.m));
                push("dim", text(r.dim));
                push("decomposition", Cell::Sum(r.decomposition.clone()));
                for (mu, v) in partitions(r.m).iter().zip(r.character.values()) {
                    push(&format!("chi({mu})"), text(rational_string(v)));
                }
            }
            ReportBody::Spectrum(r) => {
                push("n", text(r.n));
                for e in &r.eigenspaces {
                    push(&format!("eigenvalue {}", e.eigenvalue), text(e.multiplicity));
                    push(&format!("shape for {}", e.eigenvalue), Cell::Shape(e.shape.clone()));
                }
            }
            ReportBody::StandardBasis(r) => {
                push("n", text(r.n));
                push("count", text(r.count));
                push("catalan", text(r.catalan));
                push("independent", text(r.independent));
                for (i, b) in r.brackets.iter().enumerate() {
                    push(&format!("bracket {}", i + 1), text(b));
                }
            }
            ReportBody::Garnir(r) => {
                push("shape", Cell::Shape(r.shape.clone()));
                push("mode", text(r.mode));
                push("standard_only", text(r.standard_only));
                push("tabloid_dim", text(r.tabloid_dim));
                push("generators", text(r.generators));
                push("relation_rank", text(r.relation_rank));
                push("quotient_dim", text(r.quotient_dim));
                push("hook_dim", text(r.hook_dim));
            }
            ReportBody::Conjecture(r) => {
                push("n", text(r.n));
                push("k", text(r.k));
                push("m", text(r.m));
                push("engine_dim", opt(&r.engine_dim));
                push("predicted_dim", text(r.predicted_dim));
                match &r.engine_decomposition {
                    Some(d) => push("engine_decomposition", Cell::Sum(d.clone())),
                    None => push("engine_decomposition", text("unavailable")),
                }
                push("predicted_decomposition", Cell::Sum(r.predicted_decomposition.clone()));
                for mu in &r.rejected_constituents {
                    push("rejected_constituent", Cell::Shape(mu.clone()));
                }
                push("verdict", text(r.verdict));
            }
            ReportBody::Selftest(s) => {
                for c in &s.checks {
                    let v = if c.passed { "pass".to_string() } else { format!("FAIL ({})", c.detail) };
                    push(&c.name, text(v));
                }
            }
        }
        rows
    }
}

impl Report {
    pub fn new(command: impl Into<String>, body: ReportBody, config: &RunConfig) -> Report {
        Report { command: command.into(), body, config: config.clone() }
    }

    fn config_rows(&self) -> Vec<(String, Cell)> {
        let c = &self.config;
        let primes: Vec<String> = c.primes.iter().map(u64::to_string).collect();
        vec![
            ("config.max_basis".into(), text(c.max_basis)),
            ("config.max_relation_rows".into(), text(c.max_relation_rows)),
            ("config.max_character_basis".into(), text(c.max_character_basis)),
            ("config.max_phi_n".into(), text(c.max_phi_n)),
            ("config.primes".into(), text(primes.join(" "))),
            ("config.exact".into(), text(c.exact)),
        ]
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            OutputFormat::Csv => {
                let mut s = String::from("key,value\n");
                for (k, v) in self.body.rows().into_iter().chain(self.config_rows()) {
                    s.push_str(&format!("{},{}\n", csv_field(&k), csv_field(&v.plain())));
                }
                s
            }
            OutputFormat::Latex => {
                let mut s = String::from("\\begin{tabular}{ll}\n\\hline\n");
                s.push_str(&format!("\\multicolumn{{2}}{{l}}{{{}}} \\\\\n\\hline\n", latex_escape(&self.command)));
                for (k, v) in self.body.rows().into_iter().chain(self.config_rows()) {
                    s.push_str(&format!("{} & {} \\\\\n", latex_escape(&k), v.latex()));
                }
                s.push_str("\\hline\n\\end{tabular}\n");
                s
            }
            OutputFormat::Text => {
                let mut s = String::new();
                for (k, v) in self.body.rows() {
                    s.push_str(&format!("{k}: {}\n", v.plain()));
                }
                s
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn latex_shapes() {
        assert_eq!(latex_partition(&p("2,2,1")), "2^{2}1");
        assert_eq!(latex_partition(&p("3,2,1")), "321");
        assert_eq!(latex_partition(&p("12,1,1")), "12,1^{2}");
        let d = Decomposition::from_terms([(p("2,2,1"), 1), (p("3,1,1"), 2)]);
        assert_eq!(latex_decomposition(&d), "2 S^{31^{2}} + S^{2^{2}1}");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
    }

    #[test]
    fn garnir_report_formats() {
        let r = crate::garnir::specht_quotient(&p("2,1"), crate::garnir::GarnirMode::Full, false, 8).unwrap();
        let report = Report::new("garnir check", ReportBody::Garnir(r), &RunConfig::default());
        let json = report.render(OutputFormat::Json);
        assert!(json.contains("\"quotient_dim\": 2"));
        assert!(json.contains("\"config\""));
        assert_eq!(json, report.render(OutputFormat::Json));
        assert!(report.render(OutputFormat::Csv).contains("shape,\"(2,1)\""));
        assert!(report.render(OutputFormat::Latex).contains("$21$"));
        assert!(report.render(OutputFormat::Text).contains("quotient_dim: 2"));
    }
}
