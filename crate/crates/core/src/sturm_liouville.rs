//! Numerov shooting solver for one-dimensional and radial Schrödinger
//! problems, plus quadrature tools for orthogonality and eigenbasis
//! expansion.
//!
//! Every problem is written as `u'' = g(x) u` with
//! `g(x) = l(l+1)/x² + c·(V(x) − E·w(x))`, where `c` is the kinetic factor:
//! `c = 2` for `ħ = m = 1`, `c = 1` for Rydberg atomic units. Eigenvalues are
//! reported with the Schrödinger sign: the Sturm–Liouville form
//! `(p u')' + q u = −μ w u` maps to `p = 1`, `q = −cV`, `μ = cE`.

use std::fmt;
use std::sync::Arc;

use crate::error::{domain, Error, Result};
use crate::quadrature::simpson;
use crate::wells::{BoxSpec, OscSpec};

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Kinetic factor for `ħ = m = 1`.
pub const NATURAL_UNITS: f64 = 2.0;
/// Kinetic factor for Rydberg atomic units (`ħ = 2m = 1`).
pub const RYDBERG_UNITS: f64 = 1.0;

const OVERFLOW_LIMIT: f64 = 1e250;
const MAX_BISECTIONS: usize = 200;
const ENERGY_TOLERANCE: f64 = 1e-10;
/// WKB decay exponent used to place the outer edge of truncated domains.
const TAIL_EXPONENT: f64 = 25.0;

/// Uniform grid `start, start + h, …, end`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    start: f64,
    end: f64,
    points: usize,
}

impl GridSpec {
    /// Requires at least 100 intervals.
    pub fn new(start: f64, end: f64, points: usize) -> Result<Self> {
        if !(start.is_finite() && end.is_finite() && end > start) {
            return domain(format!("grid needs start < end, got [{start}, {end}]"));
        }
        if points < 101 {
            return domain(format!("grid needs at least 100 intervals, got {}", points.saturating_sub(1)));
        }
        Ok(Self { start, end, points })
    }

    /// Grid with spacing as close to `step` as divides the interval evenly.
    pub fn with_step(start: f64, end: f64, step: f64) -> Result<Self> {
        if !(step > 0.0) {
            return domain("grid step must be positive");
        }
        let intervals = ((end - start) / step).round().max(1.0) as usize;
        Self::new(start, end, intervals + 1)
    }

    pub fn start(&self) -> f64 {
        self.start
    }
    pub fn end(&self) -> f64 {
        self.end
    }
    pub fn points(&self) -> usize {
        self.points
    }
    pub fn step(&self) -> f64 {
        (self.end - self.start) / (self.points - 1) as f64
    }
    pub fn x(&self, i: usize) -> f64 {
        if i + 1 == self.points {
            self.end
        } else {
            self.start + i as f64 * self.step()
        }
    }
    pub fn nodes(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.x(i)).collect()
    }

    /// Same interval, half the spacing.
    pub fn refined(&self) -> Self {
        Self {
            points: 2 * (self.points - 1) + 1,
            ..*self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// `u = 0` at both ends of a finite interval.
    Dirichlet,
    /// Infinite domain truncated where the solution has decayed; `u = 0`
    /// imposed at the cut.
    DecayAtInfinity,
    /// Half line `[0, R]` with `χ(0) = 0` and centrifugal term for `l`.
    RadialOrigin { l: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Clone)]
pub struct SLProblem {
    potential: RealFn,
    weight: RealFn,
    grid: GridSpec,
    boundary: Boundary,
    kinetic: f64,
}

impl fmt::Debug for SLProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SLProblem")
            .field("grid", &self.grid)
            .field("boundary", &self.boundary)
            .field("kinetic", &self.kinetic)
            .finish_non_exhaustive()
    }
}

impl SLProblem {
    pub fn new(potential: RealFn, grid: GridSpec, boundary: Boundary, kinetic: f64) -> Result<Self> {
        if !(kinetic > 0.0) {
            return domain("kinetic factor must be positive");
        }
        if matches!(boundary, Boundary::RadialOrigin { .. }) && grid.start != 0.0 {
            return domain("radial problems start at r = 0");
        }
        Ok(Self {
            potential,
            weight: Arc::new(|_| 1.0),
            grid,
            boundary,
            kinetic,
        })
    }

    pub fn with_weight(mut self, weight: RealFn) -> Self {
        self.weight = weight;
        self
    }

    pub fn with_grid(mut self, grid: GridSpec) -> Self {
        self.grid = grid;
        self
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn kinetic(&self) -> f64 {
        self.kinetic
    }

    pub fn potential(&self, x: f64) -> f64 {
        (self.potential)(x)
    }

    pub fn weight(&self, x: f64) -> f64 {
        (self.weight)(x)
    }

    fn angular(&self) -> Option<u32> {
        match self.boundary {
            Boundary::RadialOrigin { l } => Some(l),
            _ => None,
        }
    }

    /// Effective potential including the centrifugal barrier
    /// `l(l+1)/(c r²)`.
    pub fn effective_potential(&self, x: f64) -> f64 {
        let centrifugal = match self.angular() {
            Some(l) if l > 0 => f64::from(l * (l + 1)) / (self.kinetic * x * x),
            _ => 0.0,
        };
        self.potential(x) + centrifugal
    }

    fn g(&self, x: f64, energy: f64) -> f64 {
        let centrifugal = match self.angular() {
            Some(l) if l > 0 => f64::from(l * (l + 1)) / (x * x),
            _ => 0.0,
        };
        centrifugal + self.kinetic * (self.potential(x) - energy * self.weight(x))
    }

    fn g_table(&self, grid: &GridSpec, energy: f64) -> Vec<f64> {
        let radial = self.angular().is_some();
        (0..grid.points)
            .map(|i| {
                if radial && i == 0 {
                    f64::NAN
                } else {
                    self.g(grid.x(i), energy)
                }
            })
            .collect()
    }

    /// Infinite square well on `[-L/2, L/2]`.
    pub fn box_well(spec: BoxSpec, points: usize) -> Result<Self> {
        let half = 0.5 * spec.width();
        Self::new(
            Arc::new(|_| 0.0),
            GridSpec::new(-half, half, points)?,
            Boundary::Dirichlet,
            NATURAL_UNITS,
        )
    }

    /// 1D oscillator `ω²x²/2`, truncated to hold states up to `max_energy`.
    pub fn harmonic(spec: OscSpec, max_energy: f64, step: f64) -> Result<Self> {
        let omega = spec.omega();
        let potential: RealFn = Arc::new(move |x| 0.5 * omega * omega * x * x);
        let edge = decay_cutoff(&*potential, max_energy, NATURAL_UNITS, 0.0, step)?;
        Self::new(
            potential,
            GridSpec::with_step(-edge, edge, step)?,
            Boundary::DecayAtInfinity,
            NATURAL_UNITS,
        )
    }

    /// Hydrogen radial problem in Rydberg units, `V = −2/r`.
    pub fn hydrogen(l: u32, max_energy: f64, step: f64) -> Result<Self> {
        if max_energy >= 0.0 {
            return domain("hydrogen bound states need negative energy");
        }
        let potential: RealFn = Arc::new(|r| -2.0 / r);
        let centrifugal = move |r: f64| -2.0 / r + f64::from(l * (l + 1)) / (r * r);
        let edge = decay_cutoff(&centrifugal, max_energy, RYDBERG_UNITS, step, step)?;
        Self::new(
            potential,
            GridSpec::with_step(0.0, edge, step)?,
            Boundary::RadialOrigin { l },
            RYDBERG_UNITS,
        )
    }

    /// Isotropic 3D oscillator radial problem, `V = ω²r²/2`, `ħ = m = 1`.
    pub fn iso_harmonic(l: u32, spec: OscSpec, max_energy: f64, step: f64) -> Result<Self> {
        let omega = spec.omega();
        let potential: RealFn = Arc::new(move |r| 0.5 * omega * omega * r * r);
        let lf = f64::from(l * (l + 1));
        let eff = move |r: f64| 0.5 * omega * omega * r * r + lf / (2.0 * r * r);
        let edge = decay_cutoff(&eff, max_energy, NATURAL_UNITS, step, step)?;
        Self::new(
            potential,
            GridSpec::with_step(0.0, edge, step)?,
            Boundary::RadialOrigin { l },
            NATURAL_UNITS,
        )
    }
}

/// Walks outward from `from` past the outermost classical turning point at
/// `energy` until the WKB exponent `∫√(c(V−E)) dx` reaches 25.
pub fn decay_cutoff<F: Fn(f64) -> f64 + ?Sized>(
    potential: &F,
    energy: f64,
    kinetic: f64,
    from: f64,
    step: f64,
) -> Result<f64> {
    let dx = step.max(1e-4);
    let mut x = from.max(dx);
    let mut seen_allowed = false;
    let mut exponent = 0.0;
    for _ in 0..50_000_000usize {
        let excess = potential(x) - energy;
        if excess < 0.0 {
            seen_allowed = true;
            exponent = 0.0;
        } else if seen_allowed {
            exponent += (kinetic * excess).sqrt() * dx;
            if exponent >= TAIL_EXPONENT {
                return Ok(x);
            }
        }
        x += dx;
    }
    Err(Error::NoTurningPoint { energy })
}

/// Integrates `u'' = g u` across the whole grid with the Numerov stencil.
///
/// Forward runs start from the left boundary seed: `u = 0` plus a small
/// slope, or the regular series `r^{l+1}(1 + a₁r)` at a radial origin.
/// Backward runs start from `u(end) = 0`; for radial problems the value at
/// `r = 0` is reported as 0. Whenever `|u|` exceeds 1e250 the computed
/// samples are rescaled.
pub fn numerov_integrate(
    problem: &SLProblem,
    energy: f64,
    grid: &GridSpec,
    direction: Direction,
) -> Result<Vec<f64>> {
    let g = problem.g_table(grid, energy);
    let n = grid.points;
    let stop = match direction {
        Direction::Forward => n - 1,
        Direction::Backward => 0,
    };
    Ok(integrate_range(problem, grid, &g, direction, stop))
}

/// Integrates from the seeded boundary up to and including index `stop`.
fn integrate_range(
    problem: &SLProblem,
    grid: &GridSpec,
    g: &[f64],
    direction: Direction,
    stop: usize,
) -> Vec<f64> {
    let n = grid.points;
    let h = grid.step();
    let h12 = h * h / 12.0;
    let mut u = vec![0.0; n];
    match direction {
        Direction::Forward => {
            let mut prev_term; // (1 - h²g/12)·u at i-1
            match problem.boundary {
                Boundary::RadialOrigin { l } => {
                    let (seed, origin_curvature) = radial_seed(problem, l, h);
                    u[0] = 0.0;
                    u[1] = seed;
                    prev_term = -h12 * origin_curvature;
                }
                _ => {
                    u[0] = 0.0;
                    u[1] = h;
                    prev_term = 0.0;
                }
            }
            let mut i = 1;
            while i < stop {
                let cur = u[i] * (1.0 + 5.0 * h12 * g[i]);
                let next = (2.0 * cur - prev_term) / (1.0 - h12 * g[i + 1]);
                prev_term = u[i] * (1.0 - h12 * g[i]);
                u[i + 1] = next;
                if next.abs() > OVERFLOW_LIMIT {
                    let s = next.abs().recip();
                    for v in &mut u[..=i + 1] {
                        *v *= s;
                    }
                    prev_term *= s;
                }
                i += 1;
            }
        }
        Direction::Backward => {
            u[n - 1] = 0.0;
            u[n - 2] = h;
            let radial = problem.angular().is_some();
            let floor = if radial { stop.max(1) } else { stop };
            let mut prev_term = 0.0;
            let mut i = n - 2;
            while i > floor {
                let cur = u[i] * (1.0 + 5.0 * h12 * g[i]);
                let next = (2.0 * cur - prev_term) / (1.0 - h12 * g[i - 1]);
                prev_term = u[i] * (1.0 - h12 * g[i]);
                u[i - 1] = next;
                if next.abs() > OVERFLOW_LIMIT {
                    let s = next.abs().recip();
                    for v in &mut u[i - 1..] {
                        *v *= s;
                    }
                    prev_term *= s;
                }
                i -= 1;
            }
        }
    }
    u
}

/// Series seed `χ(h) = h^{l+1}(1 + a₁h)` and the limit of `g·χ` at the
/// origin, where `a₁ = c·lim(rV)/(2(l+1))`.
fn radial_seed(problem: &SLProblem, l: u32, h: f64) -> (f64, f64) {
    let probe = 1e-10;
    let coulomb = probe * problem.potential(probe);
    let a1 = problem.kinetic * coulomb / (2.0 * f64::from(l + 1));
    let seed = h.powi(l as i32 + 1) * (1.0 + a1 * h);
    let curvature = match l {
        0 => 2.0 * a1,
        1 => 2.0,
        _ => 0.0,
    };
    (seed, curvature)
}

/// Sign changes among interior samples; exact zeros are skipped.
pub fn count_nodes(samples: &[f64]) -> usize {
    let mut count = 0;
    let mut last = 0.0f64;
    let len = samples.len();
    if len < 3 {
        return 0;
    }
    for &v in &samples[1..len - 1] {
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            count += 1;
        }
        last = v;
    }
    count
}

/// Number of Dirichlet eigenvalues below `energy` on the problem's grid:
/// the sign changes of the forward solution on `(a, b]`.
pub fn eigenvalues_below(problem: &SLProblem, energy: f64) -> usize {
    let grid = problem.grid;
    let g = problem.g_table(&grid, energy);
    let u = integrate_range(problem, &grid, &g, Direction::Forward, grid.points - 1);
    let mut count = 0;
    let mut last = 0.0f64;
    for &v in &u[1..] {
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            count += 1;
        }
        last = v;
    }
    count
}

/// A converged eigenpair on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub energy: f64,
    pub samples: Vec<f64>,
    pub node_count: usize,
    pub converged: bool,
    pub iterations: usize,
    pub grid: GridSpec,
}

/// Index of the outermost classical turning point, or the grid midpoint when
/// the whole interior is classically allowed.
fn matching_index(g: &[f64]) -> usize {
    let n = g.len();
    let margin = 8.min(n / 4);
    let mut idx = None;
    for i in (1..n - 1).rev() {
        if g[i] < 0.0 {
            idx = Some(i);
            break;
        }
    }
    match idx {
        Some(i) if i >= margin && i + margin < n => i,
        _ => n / 2,
    }
}

/// Normalized Wronskian of the left and right solutions at `m`. Continuous
/// in energy; zero exactly when the two solutions match.
fn mismatch(problem: &SLProblem, energy: f64, m: usize) -> f64 {
    let grid = problem.grid;
    let g = problem.g_table(&grid, energy);
    let left = integrate_range(problem, &grid, &g, Direction::Forward, m + 1);
    let right = integrate_range(problem, &grid, &g, Direction::Backward, m - 1);
    let (ul, dl) = (left[m], 0.5 * (left[m + 1] - left[m - 1]));
    let (ur, dr) = (right[m], 0.5 * (right[m + 1] - right[m - 1]));
    let nl = ul.hypot(dl);
    let nr = ur.hypot(dr);
    (dl * ur - dr * ul) / (nl * nr)
}

/// Finds the eigenvalue with `node_target` interior nodes inside `bracket`.
///
/// Node counting first tightens the bracket until it isolates one level;
/// bisection on the matching-point mismatch then refines it to 1e-10.
pub fn shoot_eigenvalue(problem: &SLProblem, node_target: usize, bracket: (f64, f64)) -> Result<EigenResult> {
    let (mut lo, mut hi) = bracket;
    if !(lo < hi) {
        return domain(format!("empty bracket [{lo}, {hi}]"));
    }
    let nodes_lo = eigenvalues_below(problem, lo);
    let nodes_hi = eigenvalues_below(problem, hi);
    if nodes_lo > node_target || nodes_hi <= node_target {
        return Err(Error::BracketMiss {
            lo,
            hi,
            target: node_target,
            nodes_lo,
            nodes_hi,
        });
    }
    let mut iterations = 0;
    // isolate: count(lo) == target, count(hi) == target + 1
    let (mut clo, mut chi) = (nodes_lo, nodes_hi);
    while clo != node_target || chi != node_target + 1 {
        if iterations >= MAX_BISECTIONS {
            return Err(Error::NonConvergence { iterations });
        }
        let mid = 0.5 * (lo + hi);
        let c = eigenvalues_below(problem, mid);
        if c <= node_target {
            lo = mid;
            clo = c;
        } else {
            hi = mid;
            chi = c;
        }
        iterations += 1;
    }

    let g_mid = problem.g_table(&problem.grid, 0.5 * (lo + hi));
    let m = matching_index(&g_mid);
    let mut f_lo = mismatch(problem, lo, m);
    let f_hi = mismatch(problem, hi, m);
    if f_lo == 0.0 {
        hi = lo;
    } else if f_hi == 0.0 {
        lo = hi;
    } else if f_lo.signum() == f_hi.signum() {
        // The mismatch changes sign once per level; without a sign change
        // fall back to node-count bisection.
        while hi - lo > ENERGY_TOLERANCE {
            if iterations >= MAX_BISECTIONS {
                return Err(Error::NonConvergence { iterations });
            }
            let mid = 0.5 * (lo + hi);
            if eigenvalues_below(problem, mid) <= node_target {
                lo = mid;
            } else {
                hi = mid;
            }
            iterations += 1;
        }
    }
    while hi - lo > ENERGY_TOLERANCE {
        if iterations >= MAX_BISECTIONS {
            return Err(Error::NonConvergence { iterations });
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = mismatch(problem, mid, m);
        if f_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let energy = 0.5 * (lo + hi);
    let samples = assemble(problem, energy, m);
    let node_count = count_nodes(&samples);
    if node_count != node_target {
        return Err(Error::NonConvergence { iterations });
    }
    Ok(EigenResult {
        energy,
        samples,
        node_count,
        converged: true,
        iterations,
        grid: problem.grid,
    })
}

/// Auto-bracketing wrapper: sweeps energy upward from the potential minimum
/// until the node count passes `node_target`, then calls
/// [`shoot_eigenvalue`].
pub fn find_eigenvalue(problem: &SLProblem, node_target: usize) -> Result<EigenResult> {
    let grid = problem.grid;
    let floor = (1..grid.points - 1)
        .map(|i| problem.effective_potential(grid.x(i)))
        .filter(|v| v.is_finite())
        .fold(f64::INFINITY, f64::min);
    let lo = floor - 1e-9 * floor.abs().max(1.0);
    let mut width = 1.0;
    let mut hi = lo + width;
    let mut tries = 0;
    while eigenvalues_below(problem, hi) <= node_target {
        width *= 2.0;
        hi = lo + width;
        tries += 1;
        if tries > 200 {
            return Err(Error::NonConvergence { iterations: tries });
        }
    }
    shoot_eigenvalue(problem, node_target, (lo, hi))
}

/// Joins left and right solutions at `m`, normalizes with the weight and
/// fixes the sign so the first significant lobe is positive.
fn assemble(problem: &SLProblem, energy: f64, m: usize) -> Vec<f64> {
    let grid = problem.grid;
    let g = problem.g_table(&grid, energy);
    let left = integrate_range(problem, &grid, &g, Direction::Forward, m + 1);
    let right = integrate_range(problem, &grid, &g, Direction::Backward, m - 1);
    // least-squares match over the three samples around m
    let (num, den) = (m - 1..=m + 1).fold((0.0, 0.0), |(a, b), i| (a + left[i] * right[i], b + right[i] * right[i]));
    let scale = num / den;
    let mut u: Vec<f64> = left[..=m].to_vec();
    u.extend(right[m + 1..].iter().map(|v| v * scale));
    let norm = weighted_inner(&u, &u, problem, &grid).sqrt();
    let peak = u.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let sign = u
        .iter()
        .find(|v| v.abs() > 1e-3 * peak)
        .map(|v| v.signum())
        .unwrap_or(1.0);
    u.iter().map(|v| sign * v / norm).collect()
}

fn weighted_inner(a: &[f64], b: &[f64], problem: &SLProblem, grid: &GridSpec) -> f64 {
    let prod: Vec<f64> = (0..grid.points)
        .map(|i| a[i] * b[i] * problem.weight(grid.x(i)))
        .collect();
    simpson(&prod, grid.step())
}

fn check_shared_grid(states: &[&EigenResult]) -> Result<GridSpec> {
    let grid = states
        .first()
        .map(|s| s.grid)
        .ok_or_else(|| Error::GridMismatch("no states supplied".into()))?;
    for s in states {
        if s.grid != grid || s.samples.len() != grid.points {
            return Err(Error::GridMismatch(format!(
                "state on {:?} does not share grid {:?}",
                s.grid, grid
            )));
        }
    }
    Ok(grid)
}

fn weighted_dot<W: Fn(f64) -> f64>(a: &[f64], b: &[f64], grid: &GridSpec, weight: &W) -> f64 {
    let prod: Vec<f64> = (0..grid.points).map(|i| a[i] * b[i] * weight(grid.x(i))).collect();
    simpson(&prod, grid.step())
}

/// Gram matrix `⟨u_i, w u_j⟩` by composite Simpson quadrature.
pub fn orthogonality_matrix<W: Fn(f64) -> f64>(states: &[EigenResult], weight: W) -> Result<Vec<Vec<f64>>> {
    let refs: Vec<&EigenResult> = states.iter().collect();
    let grid = check_shared_grid(&refs)?;
    Ok(states
        .iter()
        .map(|a| {
            states
                .iter()
                .map(|b| weighted_dot(&a.samples, &b.samples, &grid, &weight))
                .collect()
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expansion {
    pub coefficients: Vec<f64>,
    /// `‖ψ − Σ a_n u_n‖₂` with the weight.
    pub residual: f64,
    /// `‖ψ‖₂²` with the weight.
    pub target_norm_sq: f64,
}

/// `a_n = ⟨w u_n, ψ⟩ / ⟨w u_n, u_n⟩` and the reconstruction residual.
pub fn expand_in_eigenbasis<W: Fn(f64) -> f64>(
    target: &[f64],
    basis: &[EigenResult],
    weight: W,
) -> Result<Expansion> {
    let refs: Vec<&EigenResult> = basis.iter().collect();
    let grid = check_shared_grid(&refs)?;
    if target.len() != grid.points {
        return Err(Error::GridMismatch(format!(
            "target has {} samples, basis grid has {}",
            target.len(),
            grid.points
        )));
    }
    let coefficients: Vec<f64> = basis
        .iter()
        .map(|u| {
            weighted_dot(&u.samples, target, &grid, &weight)
                / weighted_dot(&u.samples, &u.samples, &grid, &weight)
        })
        .collect();
    let mut recon = vec![0.0; grid.points];
    for (a, u) in coefficients.iter().zip(basis) {
        for (r, v) in recon.iter_mut().zip(&u.samples) {
            *r += a * v;
        }
    }
    let diff: Vec<f64> = target.iter().zip(&recon).map(|(t, r)| t - r).collect();
    Ok(Expansion {
        coefficients,
        residual: weighted_dot(&diff, &diff, &grid, &weight).max(0.0).sqrt(),
        target_norm_sq: weighted_dot(target, target, &grid, &weight),
    })
}

/// Fourth-order first derivative on a uniform grid, with one-sided and
/// shifted five-point stencils on the two nodes nearest each end.
fn derivative4(u: &[f64], h: f64) -> Vec<f64> {
    let n = u.len();
    let d = 12.0 * h;
    (0..n)
        .map(|i| match i {
            0 => (-25.0 * u[0] + 48.0 * u[1] - 36.0 * u[2] + 16.0 * u[3] - 3.0 * u[4]) / d,
            1 => (-3.0 * u[0] - 10.0 * u[1] + 18.0 * u[2] - 6.0 * u[3] + u[4]) / d,
            _ if i + 2 == n => {
                (3.0 * u[n - 1] + 10.0 * u[n - 2] - 18.0 * u[n - 3] + 6.0 * u[n - 4] - u[n - 5]) / d
            }
            _ if i + 1 == n => {
                (25.0 * u[n - 1] - 48.0 * u[n - 2] + 36.0 * u[n - 3] - 16.0 * u[n - 4] + 3.0 * u[n - 5])
                    / d
            }
            _ => (u[i - 2] - 8.0 * u[i - 1] + 8.0 * u[i + 1] - u[i + 2]) / d,
        })
        .collect()
}

fn sturm_operator(u: &[f64], p: &[f64], h: f64) -> Vec<f64> {
    let du = derivative4(u, h);
    let flux: Vec<f64> = du.iter().zip(p).map(|(d, pv)| d * pv).collect();
    derivative4(&flux, h)
}

/// `∫(v ℒu − u ℒv) dx` with `ℒu = (p u')'`, fourth-order differences and
/// Simpson quadrature. The potential term of `ℒ` cancels identically.
/// Returns the absolute value.
pub fn self_adjointness_defect(u: &[f64], v: &[f64], p: &[f64], grid: &GridSpec) -> Result<f64> {
    let n = grid.points;
    if u.len() != n || v.len() != n || p.len() != n {
        return Err(Error::GridMismatch("u, v, p must be sampled on the grid".into()));
    }
    let h = grid.step();
    let lu = sturm_operator(u, p, h);
    let lv = sturm_operator(v, p, h);
    let integrand: Vec<f64> = (0..n).map(|i| v[i] * lu[i] - u[i] * lv[i]).collect();
    Ok(simpson(&integrand, h).abs())
}

/// Boundary form `p (v u' − u v')|_a^b` that the defect must equal.
pub fn boundary_term(u: &[f64], v: &[f64], p: &[f64], grid: &GridSpec) -> Result<f64> {
    let n = grid.points;
    if u.len() != n || v.len() != n || p.len() != n {
        return Err(Error::GridMismatch("u, v, p must be sampled on the grid".into()));
    }
    let h = grid.step();
    let du = derivative4(u, h);
    let dv = derivative4(v, h);
    let at = |i: usize| p[i] * (v[i] * du[i] - u[i] * dv[i]);
    Ok(at(n - 1) - at(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn free(grid: GridSpec) -> SLProblem {
        SLProblem::new(Arc::new(|_| 0.0), grid, Boundary::Dirichlet, NATURAL_UNITS).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(0.0, 1.0, 50).is_err());
        assert!(GridSpec::new(1.0, 0.0, 500).is_err());
        let g = GridSpec::with_step(0.0, 1.0, 1e-3).unwrap();
        assert_eq!(g.points(), 1001);
        assert_eq!(g.x(1000), 1.0);
        assert_eq!(g.refined().points(), 2001);
    }

    #[test]
    fn free_particle_sine() {
        let grid = GridSpec::new(0.0, PI, 3001).unwrap();
        let u = numerov_integrate(&free(grid), 0.5, &grid, Direction::Forward).unwrap();
        let peak = u.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        assert!(u[grid.points() - 1].abs() <= 1e-8 * peak);
        // shape matches sin(x) up to scale
        let s = u[1500] / (grid.x(1500)).sin();
        for i in (100..2900).step_by(300) {
            assert!((u[i] - s * grid.x(i).sin()).abs() <= 1e-9 * peak);
        }
    }

    #[test]
    fn linear_solution_is_exact() {
        let grid = GridSpec::new(0.0, 2.0, 201).unwrap();
        let u = numerov_integrate(&free(grid), 0.0, &grid, Direction::Forward).unwrap();
        let h = grid.step();
        for i in 0..grid.points() {
            assert!((u[i] - grid.x(i)).abs() <= 1e-13 * (1.0 + grid.x(i)) * h.recip() * h);
        }
    }

    #[test]
    fn backward_tail_is_gaussian() {
        let osc = OscSpec::new(1.0).unwrap();
        let p = SLProblem::harmonic(osc, 0.5, 1e-3).unwrap();
        let grid = p.grid();
        let u = numerov_integrate(&p, 0.5, &grid, Direction::Backward).unwrap();
        let idx = |x: f64| ((x - grid.start()) / grid.step()).round() as usize;
        let i2 = idx(2.0);
        for &x in &[2.5, 3.0, 3.5, 4.0] {
            let i = idx(x);
            let ratio = u[i] / u[i2];
            let expect = (-(grid.x(i).powi(2) - grid.x(i2).powi(2)) / 2.0).exp();
            assert!((ratio / expect - 1.0).abs() <= 1e-6, "x={x} ratio={ratio} expect={expect}");
        }
    }

    #[test]
    fn overflow_is_rescaled() {
        let grid = GridSpec::new(0.0, 400.0, 40_001).unwrap();
        let p = SLProblem::new(Arc::new(|_| 2.0), grid, Boundary::Dirichlet, NATURAL_UNITS).unwrap();
        let u = numerov_integrate(&p, 0.0, &grid, Direction::Forward).unwrap();
        assert!(u.iter().all(|v| v.is_finite()));
        assert!(u[grid.points() - 1].abs() <= OVERFLOW_LIMIT);
    }

    #[test]
    fn shooting_examples() {
        let bx = SLProblem::box_well(BoxSpec::new(PI).unwrap(), 4001).unwrap();
        let e = shoot_eigenvalue(&bx, 0, (0.1, 1.0)).unwrap();
        assert!((e.energy - 0.5).abs() <= 1e-8);
        assert_eq!(e.node_count, 0);

        let osc = OscSpec::new(1.0).unwrap();
        let ho = SLProblem::harmonic(osc, 3.0, 2e-3).unwrap();
        let e = shoot_eigenvalue(&ho, 2, (2.0, 3.0)).unwrap();
        assert!((e.energy - 2.5).abs() <= 1e-8, "{}", e.energy);

        let h = SLProblem::hydrogen(0, -1.0, 1e-3).unwrap();
        let e = shoot_eigenvalue(&h, 0, (-1.5, -0.5)).unwrap();
        assert!((e.energy + 1.0).abs() <= 1e-6, "{}", e.energy);
    }

    #[test]
    fn bracket_miss_is_reported() {
        let bx = SLProblem::box_well(BoxSpec::new(PI).unwrap(), 2001).unwrap();
        match shoot_eigenvalue(&bx, 0, (1.0, 1.5)) {
            Err(Error::BracketMiss { nodes_lo, nodes_hi, .. }) => {
                assert_eq!((nodes_lo, nodes_hi), (1, 1));
            }
            other => panic!("expected bracket miss, got {other:?}"),
        }
    }

    #[test]
    fn eigenfunctions_have_requested_nodes_and_unit_norm() {
        let bx = SLProblem::box_well(BoxSpec::new(2.0).unwrap(), 2001).unwrap();
        for n in 0..5 {
            let e = find_eigenvalue(&bx, n).unwrap();
            assert_eq!(e.node_count, n);
            let norm = weighted_inner(&e.samples, &e.samples, &bx, &bx.grid());
            assert!((norm - 1.0).abs() <= 1e-8);
        }
    }

    #[test]
    fn orthogonality_examples() {
        let bx = SLProblem::box_well(BoxSpec::new(2.0).unwrap(), 4001).unwrap();
        let states: Vec<_> = (0..4).map(|n| find_eigenvalue(&bx, n).unwrap()).collect();
        let single = orthogonality_matrix(&states[..1], |_| 1.0).unwrap();
        assert!((single[0][0] - 1.0).abs() <= 1e-8);
        let gram = orthogonality_matrix(&states, |_| 1.0).unwrap();
        for (i, row) in gram.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((v - e).abs() <= 1e-8);
            }
        }

        let osc = OscSpec::new(1.0).unwrap();
        let ho = SLProblem::harmonic(osc, 4.0, 2e-3).unwrap();
        let states: Vec<_> = (0..4).map(|n| find_eigenvalue(&ho, n).unwrap()).collect();
        let gram = orthogonality_matrix(&states, |_| 1.0).unwrap();
        for (i, row) in gram.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((v - e).abs() <= 1e-8, "{i} {j} {v}");
            }
        }

        let other = SLProblem::box_well(BoxSpec::new(2.0).unwrap(), 3001).unwrap();
        let odd = find_eigenvalue(&other, 0).unwrap();
        let mixed = vec![states[0].clone(), odd];
        assert!(matches!(orthogonality_matrix(&mixed, |_| 1.0), Err(Error::GridMismatch(_))));
    }

    #[test]
    fn expansion_examples() {
        let bx = SLProblem::box_well(BoxSpec::new(2.0).unwrap(), 4001).unwrap();
        let basis: Vec<_> = (0..20).map(|n| find_eigenvalue(&bx, n).unwrap()).collect();
        let exp = expand_in_eigenbasis(&basis[2].samples, &basis, |_| 1.0).unwrap();
        for (i, a) in exp.coefficients.iter().enumerate() {
            let e = if i == 2 { 1.0 } else { 0.0 };
            assert!((a - e).abs() <= 1e-8);
        }

        let grid = bx.grid();
        let bump: Vec<f64> = grid
            .nodes()
            .iter()
            .map(|&x| (1.0 - x * x).powi(4) * (1.0 + 0.3 * x))
            .collect();
        let exp = expand_in_eigenbasis(&bump, &basis, |_| 1.0).unwrap();
        assert!(exp.residual <= 1e-4, "residual {}", exp.residual);
        let parseval: f64 = exp.coefficients.iter().map(|a| a * a).sum();
        assert!(parseval <= exp.target_norm_sq + 1e-12);
        assert!((exp.target_norm_sq - parseval).abs() <= 1e-4);
        assert!(expand_in_eigenbasis(&bump[1..], &basis, |_| 1.0).is_err());
    }

    #[test]
    fn self_adjointness_examples() {
        let grid = GridSpec::new(-1.0, 1.0, 2001).unwrap();
        let nodes = grid.nodes();
        let p = vec![1.0; grid.points()];
        let u1: Vec<f64> = nodes.iter().map(|x| (PI * x / 2.0).cos()).collect();
        let u2: Vec<f64> = nodes.iter().map(|x| (PI * x).sin()).collect();
        assert_eq!(self_adjointness_defect(&u1, &u1, &p, &grid).unwrap(), 0.0);
        assert!(self_adjointness_defect(&u1, &u2, &p, &grid).unwrap() <= 1e-8);

        // non-vanishing ends and variable p
        let pv: Vec<f64> = nodes.iter().map(|x| 1.0 + 0.5 * x * x).collect();
        let a: Vec<f64> = nodes.iter().map(|x| (1.3 * x).exp()).collect();
        let b: Vec<f64> = nodes.iter().map(|x| (2.0 * x + 0.4).cos()).collect();
        let defect = self_adjointness_defect(&a, &b, &pv, &grid).unwrap();
        // analytic boundary form
        let bt = |x: f64| {
            let pval = 1.0 + 0.5 * x * x;
            let (u, du) = ((1.3 * x).exp(), 1.3 * (1.3 * x).exp());
            let (v, dv) = ((2.0 * x + 0.4).cos(), -2.0 * (2.0 * x + 0.4).sin());
            pval * (v * du - u * dv)
        };
        let expected = (bt(1.0) - bt(-1.0)).abs();
        assert!((defect - expected).abs() <= 1e-6, "{defect} vs {expected}");
        let discrete = boundary_term(&a, &b, &pv, &grid).unwrap().abs();
        assert!((discrete - expected).abs() <= 1e-6);
    }

    #[test]
    fn grid_convergence_is_fourth_order() {
        let osc = OscSpec::new(1.0).unwrap();
        let coarse = SLProblem::harmonic(osc, 3.0, 0.08).unwrap();
        let fine = coarse.clone().with_grid(coarse.grid().refined());
        let e1 = (find_eigenvalue(&coarse, 2).unwrap().energy - 2.5).abs();
        let e2 = (find_eigenvalue(&fine, 2).unwrap().energy - 2.5).abs();
        assert!(e1 / e2 >= 8.0, "{e1} {e2}");
    }
}
