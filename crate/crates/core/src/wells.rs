//! Closed-form stationary states of the infinite square well, the 1D
//! harmonic oscillator, the hydrogen atom and the isotropic 3D oscillator.
//!
//! Box and oscillators use `ħ = m = 1`. Hydrogen uses Rydberg atomic units:
//! lengths in Bohr radii, energies in Rydberg, so `E_n = -1/n²`.
//! All normalization constants are positive.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::constants::PHYSICAL;
use crate::error::{domain, Result};
use crate::quadrature::integrate_gauss_legendre;
use crate::specfun::{hermite, laguerre_unchecked, log_gamma_ratio, spherical_harmonic, ComplexValue};

/// Infinite square well occupying `|x| ≤ width / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxSpec {
    width: f64,
}

impl BoxSpec {
    pub fn new(width: f64) -> Result<Self> {
        if !(width > 0.0 && width.is_finite()) {
            return domain(format!("box width must be positive, got {width}"));
        }
        Ok(Self { width })
    }

    pub fn width(&self) -> f64 {
        self.width
    }
}

/// Harmonic oscillator frequency. With `m = ħ = 1` the inverse squared
/// oscillator length `λ = mω/ħ` equals `ω`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscSpec {
    omega: f64,
    lambda: f64,
}

impl OscSpec {
    pub fn new(omega: f64) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return domain(format!("omega must be positive, got {omega}"));
        }
        Ok(Self {
            omega,
            lambda: omega,
        })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Oscillator length `x0 = 1/√λ`.
    pub fn length(&self) -> f64 {
        self.lambda.sqrt().recip()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HydrogenQN {
    n: u32,
    l: u32,
    m: i32,
}

impl HydrogenQN {
    pub fn new(n: u32, l: u32, m: i32) -> Result<Self> {
        if n == 0 {
            return domain("principal quantum number must be at least 1");
        }
        if l >= n {
            return domain(format!("l = {l} must be below n = {n}"));
        }
        if m.unsigned_abs() > l {
            return domain(format!("|m| = {} exceeds l = {l}", m.abs()));
        }
        Ok(Self { n, l, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn l(&self) -> u32 {
        self.l
    }
    pub fn m(&self) -> i32 {
        self.m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IsoOscQN {
    n_r: u32,
    l: u32,
    m: i32,
}

impl IsoOscQN {
    pub fn new(n_r: u32, l: u32, m: i32) -> Result<Self> {
        if m.unsigned_abs() > l {
            return domain(format!("|m| = {} exceeds l = {l}", m.abs()));
        }
        Ok(Self { n_r, l, m })
    }

    pub fn n_r(&self) -> u32 {
        self.n_r
    }
    pub fn l(&self) -> u32 {
        self.l
    }
    pub fn m(&self) -> i32 {
        self.m
    }

    /// Shell index `N = 2 n_r + l`.
    pub fn shell(&self) -> u32 {
        2 * self.n_r + self.l
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Box,
    Ho1d,
    Hydrogen,
    IsoHo,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Box => "box",
            Family::Ho1d => "ho1d",
            Family::Hydrogen => "hydrogen",
            Family::IsoHo => "iso_ho",
        }
    }

    pub fn is_radial(&self) -> bool {
        matches!(self, Family::Hydrogen | Family::IsoHo)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuantumNumbers {
    Box { n: u32, spec: BoxSpec },
    Ho1d { n: u32, spec: OscSpec },
    Hydrogen(HydrogenQN),
    IsoHo { qn: IsoOscQN, spec: OscSpec },
}

/// An immutable eigenstate of one of the four wells: quantum numbers, energy
/// and positive normalization constant, evaluatable anywhere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationaryState {
    qn: QuantumNumbers,
    energy: f64,
    norm: f64,
}

impl StationaryState {
    pub fn new(qn: QuantumNumbers) -> Result<Self> {
        let (energy, norm) = match qn {
            QuantumNumbers::Box { n, spec } => (box_energy(n, spec)?, (2.0 / spec.width).sqrt()),
            QuantumNumbers::Ho1d { n, spec } => (ho_energy(n, spec), ho_norm(n, spec)),
            QuantumNumbers::Hydrogen(h) => (hydrogen_energy(h.n)?, hydrogen_norm(h.n, h.l)),
            QuantumNumbers::IsoHo { qn, spec } => {
                (iso_ho_energy(qn, spec), iso_ho_norm(qn.n_r, qn.l, spec.lambda))
            }
        };
        Ok(Self { qn, energy, norm })
    }

    pub fn family(&self) -> Family {
        match self.qn {
            QuantumNumbers::Box { .. } => Family::Box,
            QuantumNumbers::Ho1d { .. } => Family::Ho1d,
            QuantumNumbers::Hydrogen(_) => Family::Hydrogen,
            QuantumNumbers::IsoHo { .. } => Family::IsoHo,
        }
    }

    pub fn quantum_numbers(&self) -> QuantumNumbers {
        self.qn
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn normalization(&self) -> f64 {
        self.norm
    }

    /// Angular momentum for radial families, `None` for 1D ones.
    pub fn angular_momentum(&self) -> Option<u32> {
        match self.qn {
            QuantumNumbers::Hydrogen(h) => Some(h.l),
            QuantumNumbers::IsoHo { qn, .. } => Some(qn.l),
            _ => None,
        }
    }

    /// Real 1D wavefunction for box/ho1d, radial function `R(r)` for the 3D
    /// families.
    pub fn profile(&self, x: f64) -> f64 {
        match self.qn {
            QuantumNumbers::Box { n, spec } => box_profile(n, x, spec, self.norm),
            QuantumNumbers::Ho1d { n, spec } => {
                let s = spec.lambda.sqrt() * x;
                self.norm * (-0.5 * s * s).exp() * hermite(n, s)
            }
            QuantumNumbers::Hydrogen(h) => hydrogen_radial_with(h.n, h.l, r_clamp(x), self.norm),
            QuantumNumbers::IsoHo { qn, spec } => {
                iso_ho_radial_with(qn.n_r, qn.l, r_clamp(x), spec.lambda, self.norm)
            }
        }
    }

    /// Full wavefunction. `theta`, `phi` are ignored by 1D families.
    pub fn evaluate(&self, x: f64, theta: f64, phi: f64) -> Result<ComplexValue> {
        match self.qn {
            QuantumNumbers::Box { .. } | QuantumNumbers::Ho1d { .. } => {
                Ok(Complex64::new(self.profile(x), 0.0))
            }
            QuantumNumbers::Hydrogen(h) => {
                Ok(spherical_harmonic(h.l, h.m, theta, phi)? * self.profile(x))
            }
            QuantumNumbers::IsoHo { qn, .. } => {
                Ok(spherical_harmonic(qn.l, qn.m, theta, phi)? * self.profile(x))
            }
        }
    }

    /// `Ψ(t) = ψ · e^{-iEt}`.
    pub fn evolve(&self, x: f64, theta: f64, phi: f64, t: f64) -> Result<ComplexValue> {
        Ok(self.evaluate(x, theta, phi)? * dynamical_phase(self.energy, t))
    }
}

fn r_clamp(r: f64) -> f64 {
    r.max(0.0)
}

pub fn box_energy(n: u32, spec: BoxSpec) -> Result<f64> {
    if n == 0 {
        return domain("box quantum number starts at 1");
    }
    let nf = f64::from(n);
    Ok(PI * PI * nf * nf / (2.0 * spec.width * spec.width))
}

/// `√(2/L) cos(nπx/L)` for odd `n`, `√(2/L) sin(nπx/L)` for even `n`, zero
/// outside the well.
pub fn box_wavefunction(n: u32, x: f64, spec: BoxSpec) -> Result<f64> {
    if n == 0 {
        return domain("box quantum number starts at 1");
    }
    Ok(box_profile(n, x, spec, (2.0 / spec.width).sqrt()))
}

fn box_profile(n: u32, x: f64, spec: BoxSpec, norm: f64) -> f64 {
    let half = 0.5 * spec.width;
    if x.abs() >= half {
        return 0.0;
    }
    let arg = f64::from(n) * PI * x / spec.width;
    if n % 2 == 1 {
        norm * arg.cos()
    } else {
        norm * arg.sin()
    }
}

pub fn ho_energy(n: u32, spec: OscSpec) -> f64 {
    (f64::from(n) + 0.5) * spec.omega
}

fn ho_norm(n: u32, spec: OscSpec) -> f64 {
    // [√(λ/π) / (2^n n!)]^{1/2}, in log space
    let ln = 0.5 * (spec.lambda / PI).ln()
        - f64::from(n) * 2f64.ln()
        - log_gamma_ratio(f64::from(n) + 1.0, 1.0).expect("positive arguments");
    (0.5 * ln).exp()
}

pub fn ho_wavefunction(n: u32, x: f64, spec: OscSpec) -> f64 {
    let s = spec.lambda.sqrt() * x;
    ho_norm(n, spec) * (-0.5 * s * s).exp() * hermite(n, s)
}

/// Hydrogen level in Rydberg: `-1/n²`.
pub fn hydrogen_energy(n: u32) -> Result<f64> {
    if n == 0 {
        return domain("principal quantum number must be at least 1");
    }
    let nf = f64::from(n);
    Ok(-1.0 / (nf * nf))
}

pub fn hydrogen_energy_ev(n: u32) -> Result<f64> {
    Ok(PHYSICAL.rydberg_to_ev(hydrogen_energy(n)?))
}

fn hydrogen_norm(n: u32, l: u32) -> f64 {
    // R = N ρ^l e^{-ρ/2} L_{n-l-1}^{2l+1}(ρ), ρ = 2r/n,
    // N² = (2/n)³ (n-l-1)! / (2n (n+l)!)
    let nf = f64::from(n);
    let ln_ratio = log_gamma_ratio(f64::from(n - l), f64::from(n + l) + 1.0)
        .expect("positive arguments");
    (0.5 * (3.0 * (2.0 / nf).ln() - (2.0 * nf).ln() + ln_ratio)).exp()
}

fn hydrogen_radial_with(n: u32, l: u32, r: f64, norm: f64) -> f64 {
    let rho = 2.0 * r / f64::from(n);
    norm * rho.powi(l as i32) * (-0.5 * rho).exp() * laguerre_unchecked(n - l - 1, f64::from(2 * l + 1), rho)
}

/// Radial function `R_{nl}(r)` in Bohr radii, normalized as `∫ R² r² dr = 1`.
pub fn hydrogen_radial(qn: HydrogenQN, r: f64) -> f64 {
    hydrogen_radial_with(qn.n, qn.l, r_clamp(r), hydrogen_norm(qn.n, qn.l))
}

pub fn hydrogen_wavefunction(qn: HydrogenQN, r: f64, theta: f64, phi: f64) -> Result<ComplexValue> {
    if r < 0.0 {
        return domain(format!("radius must be nonnegative, got {r}"));
    }
    Ok(spherical_harmonic(qn.l, qn.m, theta, phi)? * hydrogen_radial(qn, r))
}

pub fn iso_ho_energy(qn: IsoOscQN, spec: OscSpec) -> f64 {
    spec.omega * (f64::from(qn.shell()) + 1.5)
}

fn iso_ho_norm(n_r: u32, l: u32, lambda: f64) -> f64 {
    // N² = 2 λ^{l+3/2} n_r! / Γ(n_r + l + 3/2)
    let lf = f64::from(l);
    let ln = 2f64.ln()
        + (lf + 1.5) * lambda.ln()
        + log_gamma_ratio(f64::from(n_r) + 1.0, f64::from(n_r) + lf + 1.5)
            .expect("positive arguments");
    (0.5 * ln).exp()
}

fn iso_ho_radial_with(n_r: u32, l: u32, r: f64, lambda: f64, norm: f64) -> f64 {
    let w = lambda * r * r;
    norm * r.powi(l as i32) * (-0.5 * w).exp() * laguerre_unchecked(n_r, f64::from(l) + 0.5, w)
}

pub fn iso_ho_radial(qn: IsoOscQN, r: f64, spec: OscSpec) -> f64 {
    iso_ho_radial_with(
        qn.n_r,
        qn.l,
        r_clamp(r),
        spec.lambda,
        iso_ho_norm(qn.n_r, qn.l, spec.lambda),
    )
}

pub fn iso_ho_wavefunction(
    qn: IsoOscQN,
    r: f64,
    theta: f64,
    phi: f64,
    spec: OscSpec,
) -> Result<ComplexValue> {
    if r < 0.0 {
        return domain(format!("radius must be nonnegative, got {r}"));
    }
    Ok(spherical_harmonic(qn.l, qn.m, theta, phi)? * iso_ho_radial(qn, r, spec))
}

/// `e^{-iEt}` with `ħ = 1`.
pub fn dynamical_phase(energy: f64, t: f64) -> ComplexValue {
    Complex64::from_polar(1.0, -energy * t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegeneracyFamily {
    Hydrogen,
    IsoHo,
}

/// Number of independent states in one energy level: `n²` for hydrogen,
/// `(N+1)(N+2)/2` for the isotropic oscillator shell `N`.
pub fn degeneracy(family: DegeneracyFamily, level: i64) -> Result<u64> {
    match family {
        DegeneracyFamily::Hydrogen if level >= 1 => Ok((level * level) as u64),
        DegeneracyFamily::IsoHo if level >= 0 => Ok(((level + 1) * (level + 2) / 2) as u64),
        _ => domain(format!("invalid level {level} for {family:?}")),
    }
}

/// `P(r) = r² R_{nl}(r)²`.
pub fn radial_probability(qn: HydrogenQN, r: f64) -> f64 {
    if r <= 0.0 {
        return 0.0;
    }
    let rad = hydrogen_radial(qn, r);
    r * r * rad * rad
}

const RADIAL_NODES: usize = 400;

/// `⟨r^power⟩` under `P(r)`, by Gauss–Legendre on `[0, 40 r_t]` where
/// `r_t = 2n²` is the classical turning radius.
pub fn radial_moment(qn: HydrogenQN, power: i32) -> Result<f64> {
    if power <= -3 {
        return domain(format!("⟨r^{power}⟩ diverges or is unsupported"));
    }
    let nf = f64::from(qn.n);
    let r_max = 40.0 * 2.0 * nf * nf;
    let f = |r: f64| {
        if r <= 0.0 {
            return 0.0;
        }
        let rad = hydrogen_radial(qn, r);
        r.powi(2 + power) * rad * rad
    };
    Ok(integrate_gauss_legendre(f, 0.0, r_max, RADIAL_NODES))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn simpson_fn<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
        let n = if n % 2 == 0 { n } else { n + 1 };
        let h = (b - a) / n as f64;
        let mut s = f(a) + f(b);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            s += w * f(a + i as f64 * h);
        }
        s * h / 3.0
    }

    #[test]
    fn box_examples() {
        let spec = BoxSpec::new(PI).unwrap();
        assert_relative_eq!(box_energy(1, spec).unwrap(), 0.5, max_relative = 1e-15);
        let unit = BoxSpec::new(1.0).unwrap();
        assert_relative_eq!(box_energy(2, unit).unwrap(), 2.0 * PI * PI, max_relative = 1e-15);
        for n in 1..6 {
            let r = box_energy(2 * n, unit).unwrap() / box_energy(n, unit).unwrap();
            assert_eq!(r, 4.0);
        }
        assert!(box_energy(0, unit).is_err());
        assert!(BoxSpec::new(0.0).is_err());

        let two = BoxSpec::new(2.0).unwrap();
        assert_relative_eq!(box_wavefunction(1, 0.0, two).unwrap(), 1.0);
        assert_eq!(box_wavefunction(1, 1.0, two).unwrap(), 0.0);
        assert_eq!(box_wavefunction(1, -1.0, two).unwrap(), 0.0);
        assert_eq!(box_wavefunction(3, 1.7, two).unwrap(), 0.0);
        for n in 1..=6 {
            let norm = simpson_fn(|x| box_wavefunction(n, x, two).unwrap().powi(2), -1.0, 1.0, 20_000);
            assert!((norm - 1.0).abs() <= 1e-10, "n={n} norm={norm}");
        }
    }

    #[test]
    fn oscillator_examples() {
        let one = OscSpec::new(1.0).unwrap();
        assert_eq!(ho_energy(0, one), 0.5);
        assert_eq!(ho_energy(3, OscSpec::new(2.0).unwrap()), 7.0);
        for n in 0..20 {
            assert_relative_eq!(ho_energy(n + 1, one) - ho_energy(n, one), 1.0);
        }
        assert_relative_eq!(ho_wavefunction(0, 0.0, one), PI.powf(-0.25), max_relative = 1e-15);
        for m in 0..=6 {
            for n in 0..=6 {
                let v = simpson_fn(|x| ho_wavefunction(m, x, one) * ho_wavefunction(n, x, one), -12.0, 12.0, 24_000);
                let expected = if m == n { 1.0 } else { 0.0 };
                assert!((v - expected).abs() <= 1e-9, "m={m} n={n} v={v}");
            }
        }
        for n in 0..8 {
            let s = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert_relative_eq!(ho_wavefunction(n, -0.7, one), s * ho_wavefunction(n, 0.7, one));
        }
    }

    #[test]
    fn oscillator_norm_survives_large_index() {
        let one = OscSpec::new(1.0).unwrap();
        let v = ho_wavefunction(180, 1.0, one);
        assert!(v.is_finite());
    }

    #[test]
    fn hydrogen_examples() {
        assert_relative_eq!(hydrogen_energy_ev(1).unwrap(), -13.606);
        assert_relative_eq!(hydrogen_energy_ev(2).unwrap(), -3.4015);
        let mut prev = hydrogen_energy(1).unwrap();
        for n in 2..50 {
            let e = hydrogen_energy(n).unwrap();
            assert!(e > prev && e < 0.0);
            prev = e;
        }
        assert!(hydrogen_energy(0).is_err());
        assert!(HydrogenQN::new(2, 2, 0).is_err());
        assert!(HydrogenQN::new(3, 1, 2).is_err());

        let s1 = HydrogenQN::new(1, 0, 0).unwrap();
        let a = hydrogen_wavefunction(s1, 2.0, 0.3, 1.0).unwrap();
        let b = hydrogen_wavefunction(s1, 1.0, 0.3, 1.0).unwrap();
        assert!((a.re / b.re - (-1.0f64).exp()).abs() <= 1e-12);
        for n in 2..5 {
            for l in 1..n {
                let qn = HydrogenQN::new(n, l, 0).unwrap();
                assert_eq!(hydrogen_wavefunction(qn, 0.0, 0.2, 0.0).unwrap().norm(), 0.0);
            }
        }
    }

    #[test]
    fn hydrogen_radial_normalization() {
        for n in 1..=4 {
            for l in 0..n {
                let qn = HydrogenQN::new(n, l, 0).unwrap();
                let v = simpson_fn(|r| radial_probability(qn, r), 0.0, 120.0, 120_000);
                assert!((v - 1.0).abs() <= 1e-8, "n={n} l={l} v={v}");
            }
        }
        // matches the textbook 2p form R = r e^{-r/2} / (2√6)
        let p = HydrogenQN::new(2, 1, 0).unwrap();
        assert_relative_eq!(
            hydrogen_radial(p, 1.3),
            1.3 * (-0.65f64).exp() / (2.0 * 6f64.sqrt()),
            max_relative = 1e-13
        );
    }

    #[test]
    fn radial_moments_of_1s() {
        let s1 = HydrogenQN::new(1, 0, 0).unwrap();
        assert!((radial_moment(s1, 1).unwrap() - 1.5).abs() <= 1e-6);
        assert!((radial_moment(s1, -1).unwrap() - 1.0).abs() <= 1e-6);
        assert!((radial_moment(s1, 0).unwrap() - 1.0).abs() <= 1e-8);
        assert!(radial_moment(s1, -3).is_err());
        // virial theorem: ⟨V⟩ = -2⟨1/r⟩ = 2E in Rydberg units
        for n in 1..=5 {
            for l in 0..n {
                let qn = HydrogenQN::new(n, l, 0).unwrap();
                let v = -2.0 * radial_moment(qn, -1).unwrap();
                assert!((v - 2.0 * hydrogen_energy(n).unwrap()).abs() <= 1e-6);
            }
        }
    }

    #[test]
    fn iso_oscillator_examples() {
        let one = OscSpec::new(1.0).unwrap();
        assert_eq!(iso_ho_energy(IsoOscQN::new(0, 0, 0).unwrap(), one), 1.5);
        assert_eq!(
            iso_ho_energy(IsoOscQN::new(1, 0, 0).unwrap(), one),
            iso_ho_energy(IsoOscQN::new(0, 2, 1).unwrap(), one)
        );
        assert_eq!(iso_ho_energy(IsoOscQN::new(1, 1, 0).unwrap(), one), 4.5);
        assert!(IsoOscQN::new(0, 1, 2).is_err());

        let g = IsoOscQN::new(0, 0, 0).unwrap();
        let e = IsoOscQN::new(1, 0, 0).unwrap();
        let norm = simpson_fn(|r| (r * iso_ho_radial(g, r, one)).powi(2), 0.0, 12.0, 12_000);
        assert!((norm - 1.0).abs() <= 1e-8);
        let ov = simpson_fn(|r| r * r * iso_ho_radial(g, r, one) * iso_ho_radial(e, r, one), 0.0, 12.0, 12_000);
        assert!(ov.abs() <= 1e-8);
        assert!(iso_ho_wavefunction(g, 0.0, 0.0, 0.0, one).unwrap().norm() > 0.0);
        let p = IsoOscQN::new(0, 1, 0).unwrap();
        assert_eq!(iso_ho_wavefunction(p, 0.0, 0.0, 0.0, one).unwrap().norm(), 0.0);
    }

    #[test]
    fn dynamical_phase_examples() {
        assert_eq!(dynamical_phase(3.0, 0.0), Complex64::new(1.0, 0.0));
        let z = dynamical_phase(1.0, 2.0 * PI);
        assert!((z - Complex64::new(1.0, 0.0)).norm() <= 1e-12);
        let psi = Complex64::new(0.3, -1.2);
        assert_relative_eq!((dynamical_phase(0.7, 5.3) * psi).norm_sqr(), psi.norm_sqr(), max_relative = 1e-14);
    }

    #[test]
    fn degeneracy_matches_enumeration() {
        assert_eq!(degeneracy(DegeneracyFamily::Hydrogen, 1).unwrap(), 1);
        assert_eq!(degeneracy(DegeneracyFamily::IsoHo, 2).unwrap(), 6);
        assert_eq!(degeneracy(DegeneracyFamily::Hydrogen, 3).unwrap(), 9);
        assert!(degeneracy(DegeneracyFamily::Hydrogen, 0).is_err());
        assert!(degeneracy(DegeneracyFamily::IsoHo, -1).is_err());
        for n in 1..=10i64 {
            let brute: u64 = (0..n).map(|l| (2 * l + 1) as u64).sum();
            assert_eq!(degeneracy(DegeneracyFamily::Hydrogen, n).unwrap(), brute);
        }
        for big_n in 0..=10i64 {
            let mut count = 0;
            for nx in 0..=big_n {
                for ny in 0..=big_n - nx {
                    let _nz = big_n - nx - ny;
                    count += 1;
                }
            }
            assert_eq!(degeneracy(DegeneracyFamily::IsoHo, big_n).unwrap(), count);
        }
    }

    #[test]
    fn radial_probability_peak_at_bohr_radius() {
        let s1 = HydrogenQN::new(1, 0, 0).unwrap();
        assert_eq!(radial_probability(s1, 0.0), 0.0);
        // golden-section maximize
        let (mut a, mut b) = (0.2f64, 3.0f64);
        let g = (5f64.sqrt() - 1.0) / 2.0;
        for _ in 0..200 {
            let c = b - g * (b - a);
            let d = a + g * (b - a);
            if radial_probability(s1, c) > radial_probability(s1, d) {
                b = d;
            } else {
                a = c;
            }
        }
        assert!((0.5 * (a + b) - 1.0).abs() <= 1e-4);
    }

    #[test]
    fn zero_point_energies() {
        let one = OscSpec::new(1.3).unwrap();
        assert!(box_energy(1, BoxSpec::new(3.0).unwrap()).unwrap() > 0.0);
        assert_eq!(ho_energy(0, one), 1.3 / 2.0);
        assert_eq!(iso_ho_energy(IsoOscQN::new(0, 0, 0).unwrap(), one), 1.5 * 1.3);
    }

    #[test]
    fn stationary_state_dispatch() {
        let st = StationaryState::new(QuantumNumbers::Hydrogen(HydrogenQN::new(2, 1, -1).unwrap())).unwrap();
        assert_eq!(st.family(), Family::Hydrogen);
        assert_eq!(st.energy(), -0.25);
        assert!(st.normalization() > 0.0);
        let v = st.evaluate(1.5, 0.4, 0.9).unwrap();
        let w = hydrogen_wavefunction(HydrogenQN::new(2, 1, -1).unwrap(), 1.5, 0.4, 0.9).unwrap();
        assert!((v - w).norm() < 1e-15);
        let t = st.evolve(1.5, 0.4, 0.9, 3.0).unwrap();
        assert_relative_eq!(t.norm(), v.norm(), max_relative = 1e-14);
    }
}
