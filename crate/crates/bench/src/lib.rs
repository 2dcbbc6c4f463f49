//! Benchmark fixtures shared by the criterion targets.

use eigenwell_core::sturm_liouville::SLProblem;
use eigenwell_core::{OscSpec, Result};

/// Oscillator problem sized for the first `levels` states.
pub fn harmonic_problem(levels: u32, step: f64) -> Result<SLProblem> {
    let spec = OscSpec::new(1.0)?;
    SLProblem::harmonic(spec, f64::from(levels) + 1.0, step)
}

/// Hydrogen s-wave problem reaching level `n`.
pub fn hydrogen_problem(n: u32, step: f64) -> Result<SLProblem> {
    let n = f64::from(n);
    SLProblem::hydrogen(0, -1.0 / ((n + 1.0) * (n + 1.0)), step)
}
