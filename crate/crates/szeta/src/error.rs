use std::fmt;

/// Everything that ends a run early, mapped onto the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or job file (exit 2).
    Validation(String),
    /// A numerical kernel refused the request (exit 3).
    Numerical(szeta_core::Error),
    /// `verify` ran but some criteria failed (exit 1).
    VerifyFailed(usize),
    /// Anything else (exit 1).
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::VerifyFailed(_) | CliError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "invalid job: {m}"),
            CliError::Numerical(e) => write!(f, "numerical error: {e}"),
            CliError::VerifyFailed(n) => write!(f, "{n} criteria failed"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<szeta_core::Error> for CliError {
    fn from(e: szeta_core::Error) -> Self {
        CliError::Numerical(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}
