//! Output unit systems.
//!
//! Internally the box, oscillators and BIC potentials use `ħ = m = 1` with
//! lengths in Bohr radii and energies in Hartree; hydrogen is computed in
//! Rydberg. Output columns are rescaled by the factors below.

use clap::ValueEnum;
use eigenwell_core::PHYSICAL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    Natural,
    Rydberg,
    Ev,
}

/// Energy unit a quantity was computed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergyBase {
    Hartree,
    Rydberg,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scale {
    pub length: f64,
    pub energy: f64,
}

impl Units {
    pub fn scale(self, base: EnergyBase) -> Scale {
        let to_rydberg = match base {
            EnergyBase::Hartree => 2.0,
            EnergyBase::Rydberg => 1.0,
        };
        match self {
            Units::Natural => Scale {
                length: 1.0,
                energy: to_rydberg / 2.0,
            },
            Units::Rydberg => Scale {
                length: 1.0,
                energy: to_rydberg,
            },
            Units::Ev => Scale {
                length: PHYSICAL.bohr_radius_angstrom,
                energy: to_rydberg * PHYSICAL.rydberg_ev,
            },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Units::Natural => "natural",
            Units::Rydberg => "rydberg",
            Units::Ev => "ev",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hydrogen_ground_state_in_each_system() {
        let e = -1.0;
        assert_eq!(e * Units::Rydberg.scale(EnergyBase::Rydberg).energy, -1.0);
        assert_eq!(e * Units::Natural.scale(EnergyBase::Rydberg).energy, -0.5);
        assert_eq!(e * Units::Ev.scale(EnergyBase::Rydberg).energy, -13.606);
        assert_eq!(Units::Ev.scale(EnergyBase::Hartree).energy, 2.0 * 13.606);
        assert_eq!(Units::Ev.scale(EnergyBase::Hartree).length, 0.529);
    }
}
