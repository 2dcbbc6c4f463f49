//! Harmonic oscillator ladder algebra on a truncated number basis, plus the
//! coordinate-space raising operator.
//!
//! Truncating to `D` basis states breaks `[a, a†] = 1` in the single corner
//! entry `(D-1, D-1)`, where the commutator equals `-(D-1)`. Algebra checks
//! exclude that row and column.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::quadrature::simpson;

/// Dense real operator on the truncated number basis `|0⟩ … |D-1⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    matrix: DMatrix<f64>,
}

impl FockOperator {
    pub fn dimension(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn transpose(&self) -> Self {
        Self {
            matrix: self.matrix.transpose(),
        }
    }

    pub fn compose(&self, rhs: &FockOperator) -> Self {
        Self {
            matrix: &self.matrix * &rhs.matrix,
        }
    }

    pub fn apply(&self, ket: &KetVector) -> KetVector {
        let m = self.matrix.map(|v| Complex64::new(v, 0.0));
        KetVector {
            amplitudes: m * &ket.amplitudes,
        }
    }

    /// Number operator `N = a†a`, diagonal with `N[n, n] = n`.
    pub fn number(dim: usize) -> Result<Self> {
        let (a, adag) = build_ladder(dim)?;
        Ok(adag.compose(&a))
    }
}

/// State vector in the truncated number basis.
#[derive(Debug, Clone, PartialEq)]
pub struct KetVector {
    amplitudes: DVector<Complex64>,
}

impl KetVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return domain("ket amplitudes must be finite");
        }
        Ok(Self {
            amplitudes: DVector::from_vec(amplitudes),
        })
    }

    /// Basis ket `|n⟩` in dimension `dim`.
    pub fn basis(dim: usize, n: usize) -> Result<Self> {
        if n >= dim {
            return domain(format!("basis index {n} outside dimension {dim}"));
        }
        let mut v = DVector::from_element(dim, Complex64::new(0.0, 0.0));
        v[n] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes: v })
    }

    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            amplitudes: &self.amplitudes * Complex64::new(factor, 0.0),
        }
    }

    /// `⟨self|op|self⟩`.
    pub fn expectation(&self, op: &FockOperator) -> Complex64 {
        let applied = op.apply(self);
        self.amplitudes.dotc(&applied.amplitudes)
    }
}

/// Annihilation and creation operators in dimension `dim`:
/// `a[n-1, n] = √n`, `a† = aᵀ`.
pub fn build_ladder(dim: usize) -> Result<(FockOperator, FockOperator)> {
    if dim < 2 {
        return domain(format!("ladder dimension must be at least 2, got {dim}"));
    }
    let mut a = DMatrix::zeros(dim, dim);
    for n in 1..dim {
        a[(n - 1, n)] = (n as f64).sqrt();
    }
    let a = FockOperator { matrix: a };
    let adag = a.transpose();
    Ok((a, adag))
}

/// `[a, a†] - I` as a full matrix.
pub fn commutator_minus_identity(dim: usize) -> Result<DMatrix<f64>> {
    let (a, adag) = build_ladder(dim)?;
    let comm = a.compose(&adag).matrix - adag.compose(&a).matrix;
    Ok(comm - DMatrix::identity(dim, dim))
}

/// Largest entry of `|[a, a†] - I|` over the leading `(D-1)×(D-1)` block.
pub fn commutator_defect(dim: usize) -> Result<f64> {
    let defect = commutator_minus_identity(dim)?;
    let block = defect.view((0, 0), (dim - 1, dim - 1));
    Ok(block.iter().fold(0.0f64, |acc, v| acc.max(v.abs())))
}

/// Eigenvalues of `ω(N + 1/2)`, which is diagonal in the number basis.
pub fn hamiltonian_spectrum(dim: usize, omega: f64) -> Result<Vec<f64>> {
    let n = FockOperator::number(dim)?;
    Ok((0..dim).map(|i| omega * (n.matrix[(i, i)] + 0.5)).collect())
}

/// Hamiltonian matrix `ω(a†a + 1/2)`.
pub fn hamiltonian(dim: usize, omega: f64) -> Result<FockOperator> {
    let n = FockOperator::number(dim)?;
    Ok(FockOperator {
        matrix: (n.matrix + DMatrix::identity(dim, dim) * 0.5) * omega,
    })
}

/// HO ground state `(√π x0)^{-1/2} exp(-(x/x0)²/2)`.
pub fn coordinate_ground_state(x: f64, x0: f64) -> f64 {
    let s = x / x0;
    (PI.sqrt() * x0).sqrt().recip() * (-0.5 * s * s).exp()
}

/// Uniform sample grid: `points` values from `start` with spacing `step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    pub start: f64,
    pub step: f64,
    pub points: usize,
}

impl UniformGrid {
    pub fn new(start: f64, end: f64, points: usize) -> Result<Self> {
        if points < 3 || !(end > start) {
            return domain(format!("bad grid [{start}, {end}] with {points} points"));
        }
        Ok(Self {
            start,
            step: (end - start) / (points - 1) as f64,
            points,
        })
    }

    pub fn x(&self, i: usize) -> f64 {
        self.start + i as f64 * self.step
    }

    pub fn sample<F: Fn(f64) -> f64>(&self, f: F) -> Vec<f64> {
        (0..self.points).map(|i| f(self.x(i))).collect()
    }
}

const RAISE_NORM_TOLERANCE: f64 = 1e-3;

/// Applies `a† = (x/x0 - x0 d/dx)/√2` to samples of `ψ_n`, giving `ψ_{n+1}`
/// (`a†ψ_n = √(n+1) ψ_{n+1}`), then renormalizes.
///
/// Centered differences inside, second-order one-sided stencils at the ends.
/// Fails with `GridTooCoarse` when the raised norm misses 1 by more than 1e-3.
pub fn coordinate_raise(samples: &[f64], grid: &UniformGrid, n: u32, x0: f64) -> Result<Vec<f64>> {
    if samples.len() != grid.points {
        return Err(Error::GridMismatch(format!(
            "{} samples for a {}-point grid",
            samples.len(),
            grid.points
        )));
    }
    if !(x0 > 0.0) {
        return domain("oscillator length must be positive");
    }
    let h = grid.step;
    let len = samples.len();
    let deriv = |i: usize| -> f64 {
        if i == 0 {
            (-3.0 * samples[0] + 4.0 * samples[1] - samples[2]) / (2.0 * h)
        } else if i == len - 1 {
            (3.0 * samples[len - 1] - 4.0 * samples[len - 2] + samples[len - 3]) / (2.0 * h)
        } else {
            (samples[i + 1] - samples[i - 1]) / (2.0 * h)
        }
    };
    let scale = (2.0 * (f64::from(n) + 1.0)).sqrt().recip();
    let raised: Vec<f64> = (0..len)
        .map(|i| scale * (grid.x(i) / x0 * samples[i] - x0 * deriv(i)))
        .collect();
    let norm2 = simpson(&raised.iter().map(|v| v * v).collect::<Vec<_>>(), h);
    let norm = norm2.sqrt();
    if (norm - 1.0).abs() > RAISE_NORM_TOLERANCE {
        return Err(Error::GridTooCoarse(format!(
            "raised state has norm {norm}, expected 1 within {RAISE_NORM_TOLERANCE}"
        )));
    }
    Ok(raised.into_iter().map(|v| v / norm).collect())
}
