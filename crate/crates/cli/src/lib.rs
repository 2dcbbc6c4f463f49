//! Command-line front end: argument parsing, CSV rendering and the
//! verification report.

pub mod commands;
pub mod config;
pub mod error;
pub mod format;
pub mod units;
pub mod verify;

pub use commands::{render, run, Outcome};
pub use config::{Cli, RunConfig, Tolerances};
pub use error::{CliError, CliResult};
