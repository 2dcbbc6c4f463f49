//! Bound states embedded in the continuum.
//!
//! A free s-wave `sin(kr)/kr` at `E₀ = k²/2` is made square integrable by an
//! envelope `f(r) = 1/(λ + s(r))`. The modulation variable `s` grows
//! monotonically and its derivative vanishes at every zero of `sin(kr)`, so
//! the potential `V = E₀ + ½∇²Ψ/Ψ` stays finite at the nodes of `Ψ`. Units
//! are `ħ = m = 1`.

use crate::error::{domain, Error, Result};
use crate::specfun::sinc;
use crate::sturm_liouville::GridSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    StillingerHerrick,
    Darboux,
    VonNeumannWigner,
}

impl Scheme {
    pub const ALL: [Scheme; 3] = [Scheme::StillingerHerrick, Scheme::Darboux, Scheme::VonNeumannWigner];

    pub fn name(&self) -> &'static str {
        match self {
            Scheme::StillingerHerrick => "stillinger-herrick",
            Scheme::Darboux => "darboux",
            Scheme::VonNeumannWigner => "von-neumann-wigner",
        }
    }
}

impl std::str::FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stillinger-herrick" | "sh" => Ok(Scheme::StillingerHerrick),
            "darboux" | "d" => Ok(Scheme::Darboux),
            "von-neumann-wigner" | "vnw" => Ok(Scheme::VonNeumannWigner),
            other => domain(format!("unknown scheme {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BICSpec {
    scheme: Scheme,
    k: f64,
    lambda: f64,
}

impl BICSpec {
    pub fn new(scheme: Scheme, k: f64, lambda: f64) -> Result<Self> {
        if !(k > 0.0 && k.is_finite()) {
            return domain(format!("wavenumber must be positive, got {k}"));
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            return domain(format!("lambda must be positive, got {lambda}"));
        }
        Ok(Self { scheme, k, lambda })
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }
    pub fn k(&self) -> f64 {
        self.k
    }
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Embedded eigenvalue `E₀ = k²/2`, independent of scheme and λ.
    pub fn energy(&self) -> f64 {
        0.5 * self.k * self.k
    }
}

/// A constructed potential together with its embedded eigenstate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BICPotential {
    spec: BICSpec,
}

impl BICPotential {
    pub fn new(spec: BICSpec) -> Self {
        Self { spec }
    }

    pub fn spec(&self) -> BICSpec {
        self.spec
    }

    pub fn energy(&self) -> f64 {
        self.spec.energy()
    }

    pub fn s(&self, r: f64) -> f64 {
        modulation_s(&self.spec, r)
    }

    pub fn f(&self, r: f64) -> f64 {
        modulation_f(&self.spec, r)
    }

    pub fn potential(&self, r: f64) -> f64 {
        bic_potential(&self.spec, r)
    }

    pub fn psi(&self, r: f64) -> f64 {
        bic_wavefunction(&self.spec, r)
    }

    /// Reduced radial function `u = rΨ = sin(kr) f(r) / k`.
    pub fn u(&self, r: f64) -> f64 {
        (self.spec.k * r).sin() * self.f(r) / self.spec.k
    }
}

/// `y − sin y`, by series below |y| = 1 to avoid cancellation.
fn y_minus_sin(y: f64) -> f64 {
    if y.abs() >= 1.0 {
        return y - y.sin();
    }
    // Σ_{j≥1} (-1)^{j+1} y^{2j+1} / (2j+1)!
    let y2 = y * y;
    let mut term = y * y2 / 6.0;
    let mut sum = term;
    let mut j = 1.0;
    while term.abs() > 1e-17 * sum.abs() {
        term *= -y2 / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
        sum += term;
        j += 1.0;
    }
    sum
}

/// `8 ∫₀^x t sin²t dt = 2x² − 2x sin 2x + 2 sin²x`, by series below x = 1/2.
fn sh_integral(x: f64) -> f64 {
    if x.abs() >= 0.5 {
        let s = x.sin();
        return 2.0 * x * x - 2.0 * x * (2.0 * x).sin() + 2.0 * s * s;
    }
    // 8 Σ_{j≥1} (-1)^{j+1} 2^{2j-1} x^{2j+2} / ((2j)! (2j+2))
    let x2 = x * x;
    let mut sum = 0.0;
    let mut coef = 2.0 * x2 / 2.0; // 2^{2j-1} x^{2j} / (2j)! at j = 1
    let mut j = 1.0f64;
    loop {
        let term = 8.0 * coef * x2 / (2.0 * j + 2.0);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
        coef *= -4.0 * x2 / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
        j += 1.0;
    }
    sum
}

/// Modulation variable `s(r)`:
///
/// * Stillinger–Herrick: `8k² ∫₀^r r' sin²(kr') dr' = ½(2kr)² − 2kr sin 2kr − cos 2kr + 1`
/// * Darboux: `∫₀^r sin²(kr') dr' = r/2 − sin(2kr)/(4k)`
/// * von Neumann–Wigner: `(2kr − sin 2kr)²`
pub fn modulation_s(spec: &BICSpec, r: f64) -> f64 {
    let k = spec.k;
    let x = k * r;
    match spec.scheme {
        Scheme::StillingerHerrick => sh_integral(x),
        Scheme::Darboux => y_minus_sin(2.0 * x) / (4.0 * k),
        Scheme::VonNeumannWigner => {
            let w = y_minus_sin(2.0 * x);
            w * w
        }
    }
}

/// Envelope `f = 1/(λ + s)`.
pub fn modulation_f(spec: &BICSpec, r: f64) -> f64 {
    (spec.lambda + modulation_s(spec, r)).recip()
}

/// `Ψ(r) = sinc(kr) f(r)`, with `Ψ(0) = 1/λ`.
pub fn bic_wavefunction(spec: &BICSpec, r: f64) -> f64 {
    sinc(spec.k * r) * modulation_f(spec, r)
}

/// Closed-form potential with `E₀` as its embedded eigenvalue.
///
/// * Stillinger–Herrick: `64k⁴r² sin⁴/(λ+s)² − 4k²(sin² + 2kr sin 2kr)/(λ+s)`
/// * Darboux: `sin⁴/(λ+s)² − k sin 2kr/(λ+s)`, i.e. `−d²/dr² ln(λ+s)`;
///   the commonly quoted form with prefactors 2 and 2k is the same
///   potential written for a `−d²/dr²` kinetic operator (`ħ = 2m = 1`).
/// * von Neumann–Wigner:
///   `−64k²λ sin⁴/(λ+s)² + (48k² sin⁴ − 8k² √s sin 2kr)/(λ+s)`
///
/// All three vanish at `r = 0`.
pub fn bic_potential(spec: &BICSpec, r: f64) -> f64 {
    let k = spec.k;
    let lam = spec.lambda;
    let x = k * r;
    let s = modulation_s(spec, r);
    let d = lam + s;
    let sn = x.sin();
    let sn2 = sn * sn;
    let sn4 = sn2 * sn2;
    let s2x = (2.0 * x).sin();
    match spec.scheme {
        Scheme::StillingerHerrick => {
            64.0 * k.powi(4) * r * r * sn4 / (d * d) - 4.0 * k * k * (sn2 + 2.0 * x * s2x) / d
        }
        Scheme::Darboux => sn4 / (d * d) - k * s2x / d,
        Scheme::VonNeumannWigner => {
            let root = y_minus_sin(2.0 * x);
            -64.0 * k * k * lam * sn4 / (d * d) + (48.0 * k * k * sn4 - 8.0 * k * k * root * s2x) / d
        }
    }
}

/// Large-r form `−4k sin(2kr)/r` shared by the Stillinger–Herrick and
/// von Neumann–Wigner potentials.
pub fn asymptotic_potential(k: f64, r: f64) -> f64 {
    -4.0 * k * (2.0 * k * r).sin() / r
}

/// `max_i |−½u″ + (V − E)u| / max|u|` on the interior nodes, with the
/// three-point second difference.
pub fn eigen_residual<U, V>(u: U, potential: V, energy: f64, grid: &GridSpec) -> f64
where
    U: Fn(f64) -> f64,
    V: Fn(f64) -> f64,
{
    let h = grid.step();
    let samples: Vec<f64> = grid.nodes().iter().map(|&r| u(r)).collect();
    let peak = samples.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let mut worst = 0.0f64;
    for i in 1..samples.len() - 1 {
        let lap = (samples[i + 1] - 2.0 * samples[i] + samples[i - 1]) / (h * h);
        let r = grid.x(i);
        let res = -0.5 * lap + (potential(r) - energy) * samples[i];
        worst = worst.max(res.abs());
    }
    worst / peak
}

/// Rounding in the three-point second difference contributes about
/// `4ε/h²` relative to `max|u|`. Below this multiple of `ε/h²` the
/// residual is rounding-limited and the halving check is skipped.
const ROUNDING_MULTIPLE: f64 = 400.0;
/// Required `residual(h/2) / residual(h)` for an O(h²) stencil.
const HALVING_RATIO: f64 = 0.3;

/// Certifies `E₀` as an eigenvalue: FD residual of `u = rΨ` under the
/// scheme's potential on `grid`, which must lie in `(0, R]` with
/// `h ≤ 1e-3/k`. Fails with `GridTooCoarse` when halving `h` does not
/// shrink the residual by the second-order factor.
pub fn verify_eigen_residual(spec: &BICSpec, grid: &GridSpec) -> Result<f64> {
    if grid.start() < 0.0 {
        return domain("BIC grids live on r ≥ 0");
    }
    if grid.step() > 1e-3 / spec.k * (1.0 + 1e-9) {
        return Err(Error::GridTooCoarse(format!(
            "step {} exceeds 1e-3/k = {}",
            grid.step(),
            1e-3 / spec.k
        )));
    }
    let bic = BICPotential::new(*spec);
    let coarse = eigen_residual(|r| bic.u(r), |r| bic.potential(r), bic.energy(), grid);
    let fine = eigen_residual(|r| bic.u(r), |r| bic.potential(r), bic.energy(), &grid.refined());
    let h = grid.step();
    let floor = ROUNDING_MULTIPLE * f64::EPSILON / (h * h);
    if coarse > floor && fine > HALVING_RATIO * coarse {
        return Err(Error::GridTooCoarse(format!(
            "residual {coarse:.3e} → {fine:.3e} on halving h is not second order"
        )));
    }
    Ok(coarse)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchemeColumns {
    pub scheme: Scheme,
    pub s: Vec<f64>,
    pub f: Vec<f64>,
    pub potential: Vec<f64>,
    pub psi: Vec<f64>,
    /// Fitted exponent `p` of `|V| ∝ r^p` near the origin.
    pub small_r_exponent: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchemeTable {
    pub k: f64,
    pub lambda: f64,
    pub r: Vec<f64>,
    pub columns: Vec<SchemeColumns>,
}

/// Least-squares slope of `ln|V|` against `ln r` over `r ∈ [1e-3, 1e-2]/k`.
pub fn small_r_exponent(spec: &BICSpec) -> f64 {
    let pts: Vec<(f64, f64)> = (0..=20)
        .map(|i| {
            let r = 1e-3 / spec.k * 10f64.powf(f64::from(i) / 20.0);
            (r.ln(), bic_potential(spec, r).abs().ln())
        })
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// Side-by-side `s, f, V, Ψ` for all three schemes on `r_grid`.
pub fn scheme_comparison_table(k: f64, lambda: f64, r_grid: &[f64]) -> Result<SchemeTable> {
    let columns = Scheme::ALL
        .iter()
        .map(|&scheme| {
            let spec = BICSpec::new(scheme, k, lambda)?;
            Ok(SchemeColumns {
                scheme,
                s: r_grid.iter().map(|&r| modulation_s(&spec, r)).collect(),
                f: r_grid.iter().map(|&r| modulation_f(&spec, r)).collect(),
                potential: r_grid.iter().map(|&r| bic_potential(&spec, r)).collect(),
                psi: r_grid.iter().map(|&r| bic_wavefunction(&spec, r)).collect(),
                small_r_exponent: small_r_exponent(&spec),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SchemeTable {
        k,
        lambda,
        r: r_grid.to_vec(),
        columns,
    })
}
