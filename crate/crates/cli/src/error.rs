use std::path::PathBuf;

use thiserror::Error;

/// Failures surfaced by the command layer, each tied to a stable exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("verification failed: {0} criteria did not pass")]
    Verification(usize),
    #[error("invalid arguments: {0}")]
    BadArguments(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("solver did not converge: {0}")]
    NonConvergence(String),
    #[error("BIC eigen-residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    BicResidual { residual: f64, tolerance: f64 },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::BadArguments(_) => 2,
            CliError::Io { .. } => 3,
            CliError::NonConvergence(_) => 4,
            CliError::BicResidual { .. } => 5,
        }
    }
}

impl From<eigenwell_core::Error> for CliError {
    fn from(err: eigenwell_core::Error) -> Self {
        use eigenwell_core::Error as E;
        match err {
            E::NonConvergence { .. } | E::BracketMiss { .. } | E::RootNotBracketed { .. } => {
                CliError::NonConvergence(err.to_string())
            }
            other => CliError::BadArguments(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
