//! Old quantum theory: Bohr orbits, the frequency condition, numerical
//! Wilson–Sommerfeld action quantization and angular momentum counting.
//!
//! Lengths in Bohr radii and energies in Rydberg unless a function name says
//! otherwise. Action integrals use `ħ = m = 1`.

use std::sync::Arc;

use crate::constants::PHYSICAL;
use crate::error::{domain, Error, Result};
use crate::quadrature::gauss_chebyshev_second;
use crate::sturm_liouville::RealFn;

const TURNING_TOLERANCE: f64 = 1e-12;
const CHEBYSHEV_NODES: usize = 128;
const WS_TOLERANCE: f64 = 1e-9;

/// A quantized circular orbit: `radius = n² a_B`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitSpec {
    pub n: u32,
    pub radius: f64,
}

pub fn bohr_radius(n: u32) -> Result<f64> {
    if n == 0 {
        return domain("orbit number starts at 1");
    }
    let nf = f64::from(n);
    Ok(nf * nf)
}

pub fn bohr_orbit(n: u32) -> Result<OrbitSpec> {
    Ok(OrbitSpec {
        n,
        radius: bohr_radius(n)?,
    })
}

/// Energy of the circular orbit from the force balance: kinetic energy is
/// half the Coulomb attraction, so `E = −e²/(8πε₀ a_n) = −Ry·a_B/a_n`.
pub fn bohr_energy(n: u32) -> Result<f64> {
    Ok(-1.0 / bohr_radius(n)?)
}

pub fn bohr_energy_ev(n: u32) -> Result<f64> {
    Ok(PHYSICAL.rydberg_to_ev(bohr_energy(n)?))
}

/// Photon wavelength in Å for a transition between two levels in eV:
/// `λ = hc / ΔE`.
pub fn transition_wavelength(e_upper_ev: f64, e_lower_ev: f64) -> Result<f64> {
    let delta = e_upper_ev - e_lower_ev;
    if delta == 0.0 {
        return Err(Error::DegenerateLevels);
    }
    if delta < 0.0 {
        return domain(format!("upper level {e_upper_ev} eV lies below lower level {e_lower_ev} eV"));
    }
    Ok(PHYSICAL.hc_ev_angstrom / delta)
}

/// A bound classical orbit in a single well at fixed energy.
#[derive(Clone)]
pub struct ActionProblem {
    potential: RealFn,
    energy: f64,
    turning: (f64, f64),
}

impl std::fmt::Debug for ActionProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ActionProblem")
            .field("energy", &self.energy)
            .field("turning", &self.turning)
            .finish_non_exhaustive()
    }
}

impl ActionProblem {
    /// Locates both turning points around the well bottom at `center`.
    pub fn new(potential: RealFn, energy: f64, center: f64) -> Result<Self> {
        let turning = turning_points(&*potential, energy, center)?;
        Ok(Self {
            potential,
            energy,
            turning,
        })
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn turning_points(&self) -> (f64, f64) {
        self.turning
    }
}

/// Geometric outward scan from `center` until `V ≥ E`, then bisection on
/// `V − E` to 1e-12 in position.
pub fn turning_points<F: Fn(f64) -> f64 + ?Sized>(potential: &F, energy: f64, center: f64) -> Result<(f64, f64)> {
    let floor = potential(center);
    if energy < floor {
        return Err(Error::NoTurningPoint { energy });
    }
    if energy == floor {
        return Ok((center, center));
    }
    let find = |dir: f64| -> Result<f64> {
        let mut inner = 0.0f64;
        let mut step = 1e-3;
        for _ in 0..400 {
            let x = center + dir * step;
            if potential(x) >= energy {
                let (mut a, mut b) = (inner, step);
                while b - a > TURNING_TOLERANCE * (1.0 + b.abs()) {
                    let mid = 0.5 * (a + b);
                    if potential(center + dir * mid) >= energy {
                        b = mid;
                    } else {
                        a = mid;
                    }
                }
                return Ok(center + dir * 0.5 * (a + b));
            }
            inner = step;
            step *= 2.0;
        }
        Err(Error::NoTurningPoint { energy })
    };
    Ok((find(-1.0)?, find(1.0)?))
}

/// `J = ∮ p dx = 2 ∫ √(2(E − V)) dx` between the turning points.
///
/// Mapping `[x₋, x₊]` to `[-1, 1]` leaves a `√(1 − t²)` endpoint factor,
/// which the second-kind Gauss–Chebyshev weight absorbs.
pub fn action_integral(problem: &ActionProblem) -> f64 {
    let (a, b) = problem.turning;
    if b <= a {
        return 0.0;
    }
    let half = 0.5 * (b - a);
    let mid = 0.5 * (b + a);
    let e = problem.energy;
    let pot = &problem.potential;
    let g = |t: f64| {
        let x = mid + half * t;
        let kinetic = (2.0 * (e - pot(x))).max(0.0);
        let w = (1.0 - t * t).sqrt();
        if w == 0.0 {
            0.0
        } else {
            kinetic.sqrt() / w
        }
    };
    2.0 * half * gauss_chebyshev_second(g, CHEBYSHEV_NODES)
}

/// Solves `J(E) = 2πn` (with `ħ = 1`) by bisection for any increasing
/// action function starting at `floor`.
pub fn ws_quantize_with<A: Fn(f64) -> Result<f64>>(action: A, n: u32, floor: f64) -> Result<f64> {
    if n == 0 {
        return domain("quantum number starts at 1");
    }
    let target = 2.0 * std::f64::consts::PI * f64::from(n);
    let lo0 = floor;
    let mut width = 1.0;
    let mut hi = lo0 + width;
    let mut tries = 0;
    while action(hi)? < target {
        width *= 2.0;
        hi = lo0 + width;
        tries += 1;
        if tries > 200 {
            return Err(Error::RootNotBracketed { lo: lo0, hi });
        }
    }
    let mut lo = lo0;
    if action(lo)? > target {
        return Err(Error::RootNotBracketed { lo, hi });
    }
    let mut iterations = 0;
    while hi - lo > WS_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if action(mid)? < target {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
        if iterations > 400 {
            return Err(Error::NonConvergence { iterations });
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Wilson–Sommerfeld level `n` of a single-well potential with its minimum
/// at `center`.
pub fn ws_quantize(potential: RealFn, center: f64, n: u32) -> Result<f64> {
    let floor = potential(center);
    let pot = Arc::clone(&potential);
    ws_quantize_with(
        move |e| {
            let p = ActionProblem::new(Arc::clone(&pot), e, center)?;
            Ok(action_integral(&p))
        },
        n,
        floor,
    )
}

/// `|L| = √(l(l+1))` in units of ħ.
pub fn angular_momentum_modulus(l: u32) -> f64 {
    f64::from(l * (l + 1)).sqrt()
}

/// `|L|` in J·s.
pub fn angular_momentum_si(l: u32) -> f64 {
    angular_momentum_modulus(l) * PHYSICAL.hbar_si
}

/// Magnetic-number counting convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Era {
    /// Sommerfeld's counting, which drops `m = 0`.
    Old,
    #[default]
    Modern,
}

/// Allowed `L_z` projections in units of ħ.
pub fn lz_values(l: u32, era: Era) -> Vec<i32> {
    let l = l as i32;
    (-l..=l).filter(|&m| era == Era::Modern || m != 0).collect()
}

/// Number of orientations of `L`: `2l + 1` (modern) or `2l` (old).
pub fn orientation_count(l: u32, era: Era) -> u32 {
    lz_values(l, era).len() as u32
}

/// Azimuthal momentum of a circular orbit, `p_φ = m h/2π = m` with `ħ = 1`.
pub fn azimuthal_momentum(m: i32) -> f64 {
    f64::from(m)
}

/// Sommerfeld's azimuthal number `k = n_θ + |m|` corresponds to `l + 1`.
pub fn sommerfeld_k(l: u32) -> u32 {
    l + 1
}

/// Axis ratio `a/b = n/k` of a Sommerfeld ellipse.
pub fn ellipse_axis_ratio(n: u32, k: u32) -> Result<f64> {
    if k == 0 || k > n {
        return domain(format!("need 1 ≤ k ≤ n, got k = {k}, n = {n}"));
    }
    Ok(f64::from(n) / f64::from(k))
}
