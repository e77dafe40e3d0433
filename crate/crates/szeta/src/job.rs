//! The job description shared by the flag parser and `--job file.json`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use szeta_core::asymptotics::{A_MAX, DEFAULT_N_MAX, DEFAULT_SMALL_N_MAX};
use szeta_core::sae::beta_from_gamma;
use szeta_core::zeta::{DEFAULT_M, DEFAULT_MERGE_TOL, DEFAULT_POLE_GUARD};
use szeta_core::{Complex64, CouplingParams, ExtensionParam, Regime, SecularContext};

use crate::error::CliError;

pub const DEFAULT_LEVELS: usize = 10;
/// Upper limits on sizes accepted from the command line.
pub const MAX_LEVELS: usize = 10_000_000;
pub const MAX_BIG_N: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Spectrum,
    Zeta,
    Poles,
    Heat,
    Verify,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Zeta => "zeta",
            Command::Poles => "poles",
            Command::Heat => "heat",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Specfun,
    Spectrum,
    Asymptotics,
    Zeta,
    #[default]
    All,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Specfun => "specfun",
            Suite::Spectrum => "spectrum",
            Suite::Asymptotics => "asymptotics",
            Suite::Zeta => "zeta",
            Suite::All => "all",
        }
    }
}

/// `β` as given by the user: a number or the literal `-inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Beta(pub ExtensionParam);

impl FromStr for Beta {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "-inf" {
            return Ok(Beta(ExtensionParam::MinusInfinity));
        }
        match t.parse::<f64>() {
            Ok(b) if b.is_finite() => Ok(Beta(ExtensionParam::Finite(b))),
            _ => Err(format!("beta must be a finite number or \"-inf\", got {s:?}")),
        }
    }
}

impl fmt::Display for Beta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Beta {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            ExtensionParam::Finite(b) => s.serialize_f64(b),
            ExtensionParam::MinusInfinity => s.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Beta {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Number(b) => Ok(Beta(ExtensionParam::Finite(b))),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// A full job. Field names are those of the JSON job file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Beta>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(default = "default_levels")]
    pub n_max: usize,
    #[serde(rename = "M", default = "default_m")]
    pub big_m: usize,
    #[serde(rename = "N_max", default = "default_big_n")]
    pub big_n_max: usize,
    #[serde(default = "default_small_n")]
    pub n_pole_max: usize,
    #[serde(default)]
    pub s_values: Vec<String>,
    #[serde(default)]
    pub t_values: Vec<f64>,
    #[serde(default)]
    pub format: Format,
    #[serde(default = "default_merge_tol")]
    pub merge_tol: f64,
    #[serde(default = "default_pole_guard")]
    pub pole_guard: f64,
    #[serde(default)]
    pub suite: Suite,
}

fn default_levels() -> usize {
    DEFAULT_LEVELS
}
fn default_m() -> usize {
    DEFAULT_M
}
fn default_big_n() -> usize {
    DEFAULT_N_MAX
}
fn default_small_n() -> usize {
    DEFAULT_SMALL_N_MAX
}
fn default_merge_tol() -> f64 {
    DEFAULT_MERGE_TOL
}
fn default_pole_guard() -> f64 {
    DEFAULT_POLE_GUARD
}

impl JobSpec {
    /// A job with every optional field at its default.
    pub fn new(command: Command) -> Self {
        JobSpec {
            command,
            g: None,
            kappa: None,
            beta: None,
            gamma: None,
            n_max: DEFAULT_LEVELS,
            big_m: DEFAULT_M,
            big_n_max: DEFAULT_N_MAX,
            n_pole_max: DEFAULT_SMALL_N_MAX,
            s_values: Vec::new(),
            t_values: Vec::new(),
            format: Format::Json,
            merge_tol: DEFAULT_MERGE_TOL,
            pole_guard: DEFAULT_POLE_GUARD,
            suite: Suite::All,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Validation(format!("job file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("job specs always serialize")
    }

    /// Checks ranges and resolves the coupling and extension.
    pub fn validate(&self) -> Result<Job, CliError> {
        let bad = |m: String| Err(CliError::Validation(m));
        let ctx = if self.command == Command::Verify {
            None
        } else {
            Some(self.context()?)
        };
        if self.n_max > MAX_LEVELS {
            return bad(format!("n_max must be at most {MAX_LEVELS}"));
        }
        if self.big_m == 0 || self.big_m > MAX_LEVELS {
            return bad(format!("M must lie in 1..={MAX_LEVELS}"));
        }
        if self.big_n_max == 0 || self.big_n_max > MAX_BIG_N {
            return bad(format!("N_max must lie in 1..={MAX_BIG_N}"));
        }
        if self.n_pole_max >= A_MAX {
            return bad(format!("n_pole_max must be below {A_MAX}"));
        }
        if !(self.merge_tol > 0.0 && self.merge_tol <= 1e-3) {
            return bad("merge_tol must lie in (0, 1e-3]".into());
        }
        if !(self.pole_guard > 0.0 && self.pole_guard < 0.5) {
            return bad("pole_guard must lie in (0, 0.5)".into());
        }
        let s_values = self
            .s_values
            .iter()
            .map(|s| parse_complex(s))
            .collect::<Result<Vec<_>, _>>()?;
        if self.command == Command::Zeta && s_values.is_empty() {
            return bad("zeta needs at least one s value".into());
        }
        if let Some(t) = self.t_values.iter().find(|t| !(t.is_finite() && **t > 0.0)) {
            return bad(format!("t values must be positive, got {t}"));
        }
        Ok(Job {
            spec: self.clone(),
            ctx,
            s_values,
        })
    }

    fn context(&self) -> Result<SecularContext, CliError> {
        let bad = |m: String| Err(CliError::Validation(m));
        let params = match (self.g, self.kappa) {
            (Some(g), None) => CouplingParams::from_g(g),
            (None, Some(k)) => CouplingParams::from_kappa(k),
            (Some(_), Some(_)) => return bad("give either g or kappa, not both".into()),
            (None, None) => return bad("one of g or kappa is required".into()),
        }
        .map_err(|e| CliError::Validation(e.to_string()))?;
        let ext = match (self.beta, self.gamma) {
            (Some(_), Some(_)) => return bad("give either beta or gamma, not both".into()),
            (Some(b), None) => b.0,
            (None, Some(gamma)) => beta_from_gamma(gamma, &params).map_err(|e| CliError::Validation(e.to_string()))?,
            // the closure is unique there; β plays no role
            (None, None) if params.regime() == Regime::EssentiallySelfAdjoint => ExtensionParam::MinusInfinity,
            (None, None) => return bad("one of beta or gamma is required for 0 <= g < 3/4".into()),
        };
        Ok(SecularContext::new(params, ext))
    }
}

/// A validated job.
#[derive(Debug, Clone)]
pub struct Job {
    pub spec: JobSpec,
    /// `None` for `verify`.
    pub ctx: Option<SecularContext>,
    pub s_values: Vec<Complex64>,
}

/// Parses `"re"` or `"re,im"`.
pub fn parse_complex(text: &str) -> Result<Complex64, CliError> {
    let err = || CliError::Validation(format!("s must be \"re\" or \"re,im\", got {text:?}"));
    let mut parts = text.split(',');
    let re: f64 = parts.next().ok_or_else(err)?.trim().parse().map_err(|_| err())?;
    let im: f64 = match parts.next() {
        Some(p) => p.trim().parse().map_err(|_| err())?,
        None => 0.0,
    };
    if parts.next().is_some() || !re.is_finite() || !im.is_finite() {
        return Err(err());
    }
    Ok(Complex64::new(re, im))
}
