//! Run configuration: bounds, primes, output settings.
//!
//! Configuration files are plain `key = value` lines; `#` starts a comment.
//!
//! ```text
//! max_basis = 100000
//! primes = 2147483647, 2147483629
//! exact = false
//! format = json
//! ```

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::engine::{EngineConfig, Limits};
use crate::error::{Error, Result};
use crate::linalg::modular::validate_primes;
use crate::linalg::{RankPolicy, DEFAULT_PRIMES};

/// Environment variable that overrides the configured thread count.
pub const THREADS_ENV: &str = "LANKE_THREADS";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Latex,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "latex" => Ok(OutputFormat::Latex),
            "text" => Ok(OutputFormat::Text),
            _ => Err(Error::Parse(format!("unknown format {s:?} (expected json, csv, latex or text)"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Latex => "latex",
            OutputFormat::Text => "text",
        })
    }
}

/// Everything that determines a run. Thread count and output path are not
/// serialized: they do not affect results.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub max_basis: usize,
    pub max_relation_rows: usize,
    pub max_character_basis: usize,
    pub max_phi_n: usize,
    pub primes: Vec<u64>,
    /// Confirm modular ranks with exact elimination.
    pub exact: bool,
    #[serde(skip)]
    pub threads: Option<usize>,
    #[serde(skip)]
    pub format: OutputFormat,
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let limits = Limits::default();
        RunConfig {
            max_basis: limits.max_basis,
            max_relation_rows: limits.max_relation_rows,
            max_character_basis: limits.max_character_basis,
            max_phi_n: limits.max_phi_n,
            primes: DEFAULT_PRIMES.to_vec(),
            exact: false,
            threads: None,
            format: OutputFormat::Json,
            output: None,
        }
    }
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| Error::Parse(format!("bad value {value:?} for {key}")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(Error::Parse(format!("bad boolean {value:?} for {key}"))),
    }
}

impl RunConfig {
    /// Applies `key = value` lines on top of `self`.
    pub fn apply_text(mut self, text: &str) -> Result<Self> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", lineno + 1)))?;
            self.set(key.trim(), value.trim())?;
        }
        self.validate()?;
        Ok(self)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "max_basis" => self.max_basis = parse_value(key, value)?,
            "max_relation_rows" => self.max_relation_rows = parse_value(key, value)?,
            "max_character_basis" => self.max_character_basis = parse_value(key, value)?,
            "max_phi_n" => self.max_phi_n = parse_value(key, value)?,
            "primes" => {
                self.primes = value
                    .split(',')
                    .map(|p| parse_value(key, p.trim()))
                    .collect::<Result<_>>()?
            }
            "exact" => self.exact = parse_bool(key, value)?,
            "threads" => self.threads = Some(parse_value(key, value)?),
            "format" => self.format = value.parse()?,
            "output" => self.output = Some(PathBuf::from(value)),
            _ => return Err(Error::Parse(format!("unknown config key {key:?}"))),
        }
        Ok(())
    }

    /// Overrides the thread count from `LANKE_THREADS` as read by `lookup`.
    pub fn apply_env(mut self, lookup: impl Fn(&str) -> Option<String>) -> Result<Self> {
        if let Some(v) = lookup(THREADS_ENV) {
            self.threads = Some(parse_value(THREADS_ENV, v.trim())?);
        }
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("max_basis", self.max_basis),
            ("max_relation_rows", self.max_relation_rows),
            ("max_character_basis", self.max_character_basis),
            ("max_phi_n", self.max_phi_n),
        ] {
            if v == 0 {
                return Err(Error::Invalid(format!("{name} must be positive")));
            }
        }
        if self.threads == Some(0) {
            return Err(Error::Invalid("threads must be positive".into()));
        }
        validate_primes(&self.primes)
    }

    pub fn engine_config(&self) -> EngineConfig {
        EngineConfig {
            limits: Limits {
                max_basis: self.max_basis,
                max_relation_rows: self.max_relation_rows,
                max_character_basis: self.max_character_basis,
                max_phi_n: self.max_phi_n,
            },
            rank: RankPolicy { primes: self.primes.clone(), verify_exact: self.exact, ..RankPolicy::default() },
        }
    }
}

impl FromStr for RunConfig {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RunConfig::default().apply_text(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_file() {
        let cfg: RunConfig = "# bounds\nmax_basis = 500\nprimes = 2147483629 , 2147483587\nexact = yes\nformat = csv\nthreads = 3\n"
            .parse()
            .unwrap();
        assert_eq!(cfg.max_basis, 500);
        assert_eq!(cfg.primes, vec![2147483629, 2147483587]);
        assert!(cfg.exact);
        assert_eq!(cfg.format, OutputFormat::Csv);
        assert_eq!(cfg.threads, Some(3));
        assert!(cfg.engine_config().rank.verify_exact);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["max_basis = 0", "primes = 15", "primes =", "format = xml", "colour = red", "max_basis 5", "exact = maybe"] {
            assert!(bad.parse::<RunConfig>().is_err(), "{bad}");
        }
    }

    #[test]
    fn env_override() {
        let cfg = RunConfig::default().apply_env(|k| (k == THREADS_ENV).then(|| "2".to_string())).unwrap();
        assert_eq!(cfg.threads, Some(2));
        assert!(RunConfig::default().apply_env(|_| Some("x".into())).is_err());
        assert_eq!(RunConfig::default().apply_env(|_| None).unwrap().threads, None);
    }

    #[test]
    fn serialized_form_omits_threads() {
        let a = RunConfig { threads: Some(1), ..RunConfig::default() };
        let b = RunConfig { threads: Some(8), ..RunConfig::default() };
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
