use thiserror::Error;

/// Failure modes shared by every solver and evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error(
        "bracket [{lo}, {hi}] misses node count {target} (nodes at ends: {nodes_lo}, {nodes_hi})"
    )]
    BracketMiss {
        lo: f64,
        hi: f64,
        target: usize,
        nodes_lo: usize,
        nodes_hi: usize,
    },

    #[error("no convergence after {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    #[error("no classical turning point below energy {energy}")]
    NoTurningPoint { energy: f64 },

    #[error("degenerate levels: transition energy is zero")]
    DegenerateLevels,

    #[error("root not bracketed in [{lo}, {hi}]")]
    RootNotBracketed { lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
