//! Physical constants and unit conversions.

use std::f64::consts::PI;

/// Fine-structure constant (CODATA 2018). Only used to tie `hc` to the
/// Rydberg/Bohr pair.
pub const FINE_STRUCTURE: f64 = 1.0 / 137.035_999_084;

/// The constant set used for every SI / eV / Å conversion in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Rydberg energy in eV.
    pub rydberg_ev: f64,
    /// Bohr radius in Å.
    pub bohr_radius_angstrom: f64,
    /// Reduced Planck constant in J·s.
    pub hbar_si: f64,
    /// `hc` in eV·Å, from `Ry = α ħc / (2 a_B)`.
    pub hc_ev_angstrom: f64,
}

impl PhysicalConstants {
    pub const fn standard() -> Self {
        const RY: f64 = 13.606;
        const A_B: f64 = 0.529;
        Self {
            rydberg_ev: RY,
            bohr_radius_angstrom: A_B,
            hbar_si: 1.054e-34,
            hc_ev_angstrom: 4.0 * PI * A_B * RY / FINE_STRUCTURE,
        }
    }

    pub fn rydberg_to_ev(&self, energy_ry: f64) -> f64 {
        energy_ry * self.rydberg_ev
    }

    pub fn bohr_to_angstrom(&self, length_ab: f64) -> f64 {
        length_ab * self.bohr_radius_angstrom
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::standard()
    }
}

pub const PHYSICAL: PhysicalConstants = PhysicalConstants::standard();
