//! JSON config file support. The file mirrors the command-line flags with
//! the same names and semantics; any flag given explicitly on the command
//! line takes precedence over the file. Unknown fields are rejected so that
//! typos fail loudly instead of silently falling back to defaults.
//!
//! ```json
//! {
//!   "format": "csv",
//!   "law": "T",
//!   "r": [0.2, 2.0, 5.0],
//!   "n": 10000,
//!   "dt": 1e-4,
//!   "seed": 7
//! }
//! ```

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Deserialize;

use crate::args::{Format, Functional, Law, Method, MomentLaw};
use crate::error::{CliError, Result};

/// Rates appear as a scalar for single-rate commands and as a list for
/// grid commands; the config file accepts either spelling for both.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Rates {
    One(f64),
    Many(Vec<f64>),
}

impl Rates {
    pub fn to_vec(&self) -> Vec<f64> {
        match self {
            Rates::One(r) => vec![*r],
            Rates::Many(v) => v.clone(),
        }
    }

    pub fn to_scalar(&self) -> Option<f64> {
        match self {
            Rates::One(r) => Some(*r),
            Rates::Many(v) if v.len() == 1 => Some(v[0]),
            Rates::Many(_) => None,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub law: Option<String>,
    pub functional: Option<String>,
    pub method: Option<String>,
    pub r: Option<Rates>,
    pub k: Option<u32>,
    pub t: Option<Vec<f64>>,
    pub grid: Option<usize>,
    pub orders: Option<Vec<u32>>,
    pub n: Option<usize>,
    pub dt: Option<f64>,
    pub seed: Option<u64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        serde_json::from_str(&text).map_err(|e| CliError::Config {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    }

    pub fn format(&self) -> Result<Option<Format>> {
        parse_enum(self.format.as_deref(), "format")
    }

    pub fn law(&self) -> Result<Option<Law>> {
        parse_enum(self.law.as_deref(), "law")
    }

    pub fn moment_law(&self) -> Result<Option<MomentLaw>> {
        parse_enum(self.law.as_deref(), "law")
    }

    pub fn functional(&self) -> Result<Option<Functional>> {
        parse_enum(self.functional.as_deref(), "functional")
    }

    pub fn method(&self) -> Result<Option<Method>> {
        parse_enum(self.method.as_deref(), "method")
    }
}

fn parse_enum<E: ValueEnum>(value: Option<&str>, field: &str) -> Result<Option<E>> {
    match value {
        None => Ok(None),
        Some(s) => E::from_str(s, true)
            .map(Some)
            .map_err(|_| CliError::usage(format!("config field '{field}': unknown value '{s}'"))),
    }
}

/// Flag-over-config merge for one parameter.
pub fn pick<T>(flag: Option<T>, file: Option<T>) -> Option<T> {
    flag.or(file)
}

/// Close the merge: a parameter with no flag, no config entry, and no
/// built-in default is a usage error.
pub fn require<T>(value: Option<T>, name: &str) -> Result<T> {
    value.ok_or_else(|| {
        CliError::usage(format!(
            "missing required parameter --{name} (flag or config field)"
        ))
    })
}

/// Merge a single-rate parameter, rejecting a config list of several rates
/// for commands that take exactly one.
pub fn scalar_rate(flag: Option<f64>, file: Option<&Rates>, command: &str) -> Result<Option<f64>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match file {
        None => Ok(None),
        Some(rates) => match rates.to_scalar() {
            Some(r) => Ok(Some(r)),
            None => Err(CliError::usage(format!(
                "{command} takes a single rate, but the config file supplies a list"
            ))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rates_accept_scalar_and_list() {
        let one: Rates = serde_json::from_str("2.5").unwrap();
        assert_eq!(one.to_scalar(), Some(2.5));
        assert_eq!(one.to_vec(), vec![2.5]);
        let many: Rates = serde_json::from_str("[0.2, 2.0]").unwrap();
        assert_eq!(many.to_scalar(), None);
        assert_eq!(many.to_vec(), vec![0.2, 2.0]);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let err = serde_json::from_str::<FileConfig>(r#"{"seeed": 1}"#);
        assert!(err.is_err());
    }

    #[test]
    fn enum_fields_parse_case_insensitively() {
        let cfg: FileConfig = serde_json::from_str(r#"{"law": "tk", "method": "PATH"}"#).unwrap();
        assert_eq!(cfg.law().unwrap(), Some(Law::Tk));
        assert_eq!(cfg.method().unwrap(), Some(Method::Path));
        let bad: FileConfig = serde_json::from_str(r#"{"law": "Z"}"#).unwrap();
        assert!(bad.law().is_err());
    }

    #[test]
    fn flags_win_the_merge() {
        assert_eq!(pick(Some(1), Some(2)), Some(1));
        assert_eq!(pick(None, Some(2)), Some(2));
        assert_eq!(pick::<u32>(None, None), None);
        assert!(require(Some(5), "n").is_ok());
        assert!(require::<u32>(None, "n").is_err());
    }

    #[test]
    fn scalar_rate_rejects_config_lists_only_without_a_flag() {
        let list = Rates::Many(vec![0.2, 2.0]);
        assert_eq!(scalar_rate(Some(1.5), Some(&list), "pdf").unwrap(), Some(1.5));
        assert!(scalar_rate(None, Some(&list), "pdf").is_err());
        let single = Rates::Many(vec![2.0]);
        assert_eq!(scalar_rate(None, Some(&single), "pdf").unwrap(), Some(2.0));
        assert_eq!(scalar_rate(None, None, "pdf").unwrap(), None);
    }
}
