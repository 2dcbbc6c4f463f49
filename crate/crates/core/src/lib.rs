//! Stationary states of canonical quantum wells, computed in closed form and
//! cross-checked by an independent Numerov eigen-solver.
//!
//! * [`specfun`]: Hermite, Laguerre, associated Legendre, Kummer, spherical harmonics
//! * [`wells`]: square well, 1D/3D oscillators and hydrogen
//! * [`ladder`]: truncated Fock-space ladder algebra
//! * [`sturm_liouville`]: Numerov shooting and eigenbasis tools
//! * [`old_quantum`]: Bohr orbits and Wilson–Sommerfeld quantization
//! * [`bic`]: bound states embedded in the continuum

pub mod bic;
pub mod constants;
pub mod error;
pub mod ladder;
pub mod old_quantum;
pub mod quadrature;
pub mod specfun;
pub mod sturm_liouville;
pub mod wells;

pub use bic::{BICPotential, BICSpec, Scheme};
pub use constants::{PhysicalConstants, PHYSICAL};
pub use error::{Error, Result};
pub use ladder::{FockOperator, KetVector};
pub use specfun::ComplexValue;
pub use sturm_liouville::{Boundary, EigenResult, GridSpec, SLProblem};
pub use wells::{BoxSpec, Family, HydrogenQN, IsoOscQN, OscSpec, QuantumNumbers, StationaryState};
