//! Special-function kernel: orthogonal polynomials, truncated Kummer series,
//! spherical harmonics and log-gamma ratios.
//!
//! Polynomials are evaluated with their three-term recurrences; no
//! coefficient expansions are formed.

use std::f64::consts::PI;

use num_complex::Complex64;
use statrs::function::gamma::ln_gamma;

use crate::error::{domain, Result};

/// Complex value returned by angular and time-dependent factors.
pub type ComplexValue = Complex64;

/// Degree/order pair for a polynomial family.
///
/// `order` holds the upper index: real `α` for Laguerre, integer `m` for
/// associated Legendre.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyIndex {
    pub degree: u32,
    pub order: f64,
}

impl PolyIndex {
    pub fn new(degree: u32, order: f64) -> Self {
        Self { degree, order }
    }

    /// Checks the associated-Legendre constraint `|m| ≤ l` with integral `m`.
    pub fn legendre(degree: u32, order: i32) -> Result<Self> {
        if order.unsigned_abs() > degree {
            return domain(format!("|m| = {} exceeds l = {degree}", order.abs()));
        }
        Ok(Self {
            degree,
            order: f64::from(order),
        })
    }
}

/// Physicists' Hermite polynomial `H_n(x)`.
pub fn hermite(n: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Associated Legendre function `P_l^m(x)` with the Condon–Shortley phase
/// `(-1)^m` included.
pub fn assoc_legendre(l: u32, m: u32, x: f64) -> Result<f64> {
    if m > l {
        return domain(format!("m = {m} exceeds l = {l}"));
    }
    if !(-1.0..=1.0).contains(&x) {
        return domain(format!("|x| = {} > 1", x.abs()));
    }
    // P_m^m = (-1)^m (2m-1)!! (1-x²)^{m/2}
    let somx2 = ((1.0 - x) * (1.0 + x)).sqrt();
    let mut pmm = 1.0;
    let mut fact = 1.0;
    for _ in 0..m {
        pmm *= -fact * somx2;
        fact += 2.0;
    }
    if l == m {
        return Ok(pmm);
    }
    let mut pmmp1 = x * f64::from(2 * m + 1) * pmm;
    if l == m + 1 {
        return Ok(pmmp1);
    }
    let mut pll = 0.0;
    for ll in (m + 2)..=l {
        let llf = f64::from(ll);
        let mf = f64::from(m);
        pll = ((2.0 * llf - 1.0) * x * pmmp1 - (llf + mf - 1.0) * pmm) / (llf - mf);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    Ok(pll)
}

/// Generalized Laguerre polynomial `L_n^α(x)` in the modern convention
/// `Σ_j (-1)^j C(n+α, n-j) x^j / j!`.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> Result<f64> {
    if alpha <= -1.0 {
        return domain(format!("alpha = {alpha} must exceed -1"));
    }
    if x < 0.0 {
        return domain(format!("x = {x} must be nonnegative"));
    }
    Ok(laguerre_unchecked(n, alpha, x))
}

pub(crate) fn laguerre_unchecked(n: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let kf = f64::from(k);
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Kummer's `₁F₁(-n; c; x)` on its polynomial branch: the finite sum
/// `Σ_{j=0}^{n} (-n)_j x^j / ((c)_j j!)`.
pub fn kummer_truncated(n: u32, c: f64, x: f64) -> Result<f64> {
    let a = -f64::from(n);
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 0..n {
        let jf = f64::from(j);
        let denom = c + jf;
        if denom == 0.0 {
            return domain(format!(
                "(c)_{} vanishes for c = {c} before the series truncates",
                j + 1
            ));
        }
        term *= (a + jf) * x / (denom * (jf + 1.0));
        sum += term;
    }
    Ok(sum)
}

/// Normalized spherical harmonic `Y_l^m(θ, φ)`.
///
/// The Condon–Shortley phase enters once, through [`assoc_legendre`].
/// Negative `m` uses `Y_l^{-m} = (-1)^m conj(Y_l^m)`.
pub fn spherical_harmonic(l: u32, m: i32, theta: f64, phi: f64) -> Result<ComplexValue> {
    let am = m.unsigned_abs();
    if am > l {
        return domain(format!("|m| = {am} exceeds l = {l}"));
    }
    let norm = (f64::from(2 * l + 1) / (4.0 * PI)
        * log_gamma_ratio(f64::from(l - am) + 1.0, f64::from(l + am) + 1.0)?.exp())
    .sqrt();
    let p = assoc_legendre(l, am, theta.cos().clamp(-1.0, 1.0))?;
    let y = Complex64::from_polar(norm * p, f64::from(am) * phi);
    if m >= 0 {
        Ok(y)
    } else if am % 2 == 0 {
        Ok(y.conj())
    } else {
        Ok(-y.conj())
    }
}

/// `ln Γ(a) − ln Γ(b)` for positive arguments.
pub fn log_gamma_ratio(a: f64, b: f64) -> Result<f64> {
    if a <= 0.0 || b <= 0.0 || !a.is_finite() || !b.is_finite() {
        return domain(format!("log_gamma_ratio needs positive arguments, got ({a}, {b})"));
    }
    if a == b {
        return Ok(0.0);
    }
    Ok(ln_gamma(a) - ln_gamma(b))
}

/// Normalized cardinal sine `sin(x)/x` with the removable point handled by
/// its Taylor series.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::gauss_legendre;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    /// Explicit-sum oracle `n! Σ_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!)`.
    fn hermite_sum(n: u32, x: f64) -> f64 {
        let fact = |k: u32| (1..=k).map(f64::from).product::<f64>();
        (0..=n / 2)
            .map(|m| {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                sign * (2.0 * x).powi((n - 2 * m) as i32) / (fact(m) * fact(n - 2 * m))
            })
            .sum::<f64>()
            * fact(n)
    }

    /// Rodrigues oracle: `(-1)^m (1-x²)^{m/2} / (2^l l!) · d^{l+m}/dx^{l+m} (x²-1)^l`,
    /// differentiating the binomial expansion of `(x²-1)^l` term by term.
    fn legendre_rodrigues(l: u32, m: u32, x: f64) -> f64 {
        let fact = |k: u32| (1..=k).map(f64::from).product::<f64>();
        let d = l + m;
        let mut sum = 0.0;
        for k in 0..=l {
            // (x²-1)^l = Σ_k C(l,k) x^{2k} (-1)^{l-k}
            let power = 2 * k;
            if power < d {
                continue;
            }
            let binom = fact(l) / (fact(k) * fact(l - k));
            let sign = if (l - k) % 2 == 0 { 1.0 } else { -1.0 };
            let falling = fact(power) / fact(power - d);
            sum += sign * binom * falling * x.powi((power - d) as i32);
        }
        let cs = if m % 2 == 0 { 1.0 } else { -1.0 };
        cs * (1.0 - x * x).powf(f64::from(m) / 2.0) * sum / (2f64.powi(l as i32) * fact(l))
    }

    /// Series oracle `Σ_j (-1)^j C(n+α, n-j) x^j / j!` via Gamma functions.
    fn laguerre_series(n: u32, alpha: f64, x: f64) -> f64 {
        let fact = |k: u32| (1..=k).map(f64::from).product::<f64>();
        (0..=n)
            .map(|j| {
                let binom: f64 = (1..=n - j)
                    .map(|i| (f64::from(j) + alpha + f64::from(i)) / f64::from(i))
                    .product();
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * binom * x.powi(j as i32) / fact(j)
            })
            .sum()
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite(0, 0.7), 1.0);
        assert_eq!(hermite(1, 1.0), 2.0);
        assert_eq!(hermite(2, 1.0), 2.0);
        for n in 0..12 {
            for &x in &[-1.3, 0.0, 0.4, 2.2] {
                assert_relative_eq!(hermite(n, x), hermite_sum(n, x), max_relative = 1e-12, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn hermite_orthogonality_by_quadrature() {
        let (x, w) = gauss_legendre(400);
        let half = 12.0;
        for m in 0..=8u32 {
            for n in 0..=8u32 {
                let val: f64 = x
                    .iter()
                    .zip(&w)
                    .map(|(&t, &wt)| {
                        let y = half * t;
                        wt * half * (-y * y).exp() * hermite(m, y) * hermite(n, y)
                    })
                    .sum();
                let expected = if m == n {
                    2f64.powi(n as i32) * PI.sqrt() * (1..=n).map(f64::from).product::<f64>()
                } else {
                    0.0
                };
                let scale = 2f64.powi(n.max(m) as i32) * PI.sqrt()
                    * (1..=n.max(m)).map(f64::from).product::<f64>();
                assert!(((val - expected) / scale).abs() <= 1e-8, "m={m} n={n} val={val}");
            }
        }
    }

    #[test]
    fn legendre_examples_and_domain() {
        assert_eq!(assoc_legendre(0, 0, 0.3).unwrap(), 1.0);
        assert_relative_eq!(assoc_legendre(1, 0, 0.5).unwrap(), 0.5);
        assert_relative_eq!(assoc_legendre(1, 1, 0.0).unwrap(), -1.0);
        assert!(assoc_legendre(1, 2, 0.0).is_err());
        assert!(assoc_legendre(2, 1, 1.5).is_err());
    }

    #[test]
    fn legendre_matches_rodrigues_with_condon_shortley_sign() {
        for l in 0..=8 {
            for m in 0..=l {
                for &x in &[-0.93, -0.2, 0.0, 0.31, 0.77] {
                    let rec = assoc_legendre(l, m, x).unwrap();
                    let rod = legendre_rodrigues(l, m, x);
                    assert_relative_eq!(rec, rod, max_relative = 1e-10, epsilon = 1e-10);
                }
            }
        }
    }

    #[test]
    fn laguerre_examples_and_domain() {
        assert_eq!(laguerre(0, 0.5, 2.0).unwrap(), 1.0);
        assert_relative_eq!(laguerre(1, 0.0, 1.0).unwrap(), 0.0);
        assert_relative_eq!(laguerre(1, 0.5, 0.0).unwrap(), 1.5);
        assert!(laguerre(2, -1.0, 1.0).is_err());
        assert!(laguerre(2, 0.0, -0.1).is_err());
        for n in 0..10 {
            for &alpha in &[0.0, 0.5, 1.5, 3.0, 5.0] {
                for &x in &[0.0, 0.3, 1.7, 6.0] {
                    assert_relative_eq!(
                        laguerre(n, alpha, x).unwrap(),
                        laguerre_series(n, alpha, x),
                        max_relative = 1e-10,
                        epsilon = 1e-10
                    );
                }
            }
        }
    }

    #[test]
    fn laguerre_generating_function() {
        // (1-t)^{-α-1} exp(-x t/(1-t)) = Σ_n L_n^α(x) t^n ; truncating at n ≤ 8
        // leaves a tail of order |t|^9.
        for &alpha in &[0.0, 0.5, 2.0] {
            for &x in &[0.0, 0.8, 2.5] {
                for &t in &[-0.3f64, -0.1, 0.05, 0.3] {
                    let closed = (1.0 - t).powf(-alpha - 1.0) * (-x * t / (1.0 - t)).exp();
                    let full: f64 = (0..60)
                        .map(|n| laguerre(n, alpha, x).unwrap() * t.powi(n as i32))
                        .sum();
                    assert!((closed - full).abs() <= 1e-10, "alpha={alpha} x={x} t={t}");
                    let truncated: f64 = (0..=8)
                        .map(|n| laguerre(n, alpha, x).unwrap() * t.powi(n as i32))
                        .sum();
                    let tail: f64 = (9..60)
                        .map(|n| laguerre(n, alpha, x).unwrap() * t.powi(n as i32))
                        .sum();
                    assert!((closed - truncated - tail).abs() <= 1e-10);
                }
            }
        }
    }

    #[test]
    fn kummer_examples() {
        assert_eq!(kummer_truncated(0, 0.5, 3.0).unwrap(), 1.0);
        assert_relative_eq!(kummer_truncated(1, 0.5, 1.0).unwrap(), -1.0);
        // H_{2n}(x) = (-1)^n (2n)!/n! ₁F₁(-n; 1/2; x²), n = 2.
        for &x in &[0.0, 1.0, 0.37, 1.9] {
            let lhs = hermite(4, x);
            let rhs = 12.0 * kummer_truncated(2, 0.5, x * x).unwrap();
            assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
        }
        assert!(kummer_truncated(3, -1.0, 1.0).is_err());
        assert!(kummer_truncated(3, -3.0, 1.0).is_ok());
    }

    #[test]
    fn kummer_maps_to_hermite_up_to_constants() {
        // Even and odd Hermite polynomials are proportional to ₁F₁(-n; 1/2; x²)
        // and x ₁F₁(-n; 3/2; x²). Check the ratio is x-independent.
        for n in 0..6u32 {
            let even: Vec<f64> = [0.3, 0.9, 1.4]
                .iter()
                .map(|&x| hermite(2 * n, x) / kummer_truncated(n, 0.5, x * x).unwrap())
                .collect();
            let odd: Vec<f64> = [0.3, 0.9, 1.4]
                .iter()
                .map(|&x| hermite(2 * n + 1, x) / (x * kummer_truncated(n, 1.5, x * x).unwrap()))
                .collect();
            for v in [&even, &odd] {
                assert_relative_eq!(v[0], v[1], max_relative = 1e-10);
                assert_relative_eq!(v[0], v[2], max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn spherical_harmonic_examples() {
        let y00 = spherical_harmonic(0, 0, 1.1, 2.2).unwrap();
        assert_relative_eq!(y00.re, 0.282_094_791_773_878_1, max_relative = 1e-12);
        assert_eq!(y00.im, 0.0);
        let y10 = spherical_harmonic(1, 0, 0.0, 0.4).unwrap();
        assert_relative_eq!(y10.re, (3.0 / (4.0 * PI)).sqrt(), max_relative = 1e-12);
        assert!(spherical_harmonic(1, 2, 0.0, 0.0).is_err());
        assert!(spherical_harmonic(1, -2, 0.0, 0.0).is_err());
    }

    #[test]
    fn spherical_harmonic_orthonormality() {
        let (ct, wt) = gauss_legendre(24);
        let nphi = 32;
        let mut states = Vec::new();
        for l in 0..=4u32 {
            for m in -(l as i32)..=(l as i32) {
                states.push((l, m));
            }
        }
        for &(l1, m1) in &states {
            for &(l2, m2) in &states {
                let mut acc = Complex64::new(0.0, 0.0);
                for (&c, &w) in ct.iter().zip(&wt) {
                    let theta = c.acos();
                    for k in 0..nphi {
                        let phi = 2.0 * PI * k as f64 / nphi as f64;
                        let a = spherical_harmonic(l1, m1, theta, phi).unwrap();
                        let b = spherical_harmonic(l2, m2, theta, phi).unwrap();
                        acc += a.conj() * b * w * (2.0 * PI / nphi as f64);
                    }
                }
                let expected = if (l1, m1) == (l2, m2) { 1.0 } else { 0.0 };
                assert!((acc.re - expected).abs() <= 1e-8 && acc.im.abs() <= 1e-8);
            }
        }
    }

    #[test]
    fn log_gamma_ratio_examples() {
        assert_eq!(log_gamma_ratio(1.5, 1.5).unwrap(), 0.0);
        assert_relative_eq!(log_gamma_ratio(0.5, 1.0).unwrap(), PI.sqrt().ln(), max_relative = 1e-12);
        assert_relative_eq!(log_gamma_ratio(5.0, 3.0).unwrap(), 12f64.ln(), max_relative = 1e-12);
        assert!(log_gamma_ratio(0.0, 1.0).is_err());
        assert!(log_gamma_ratio(1.0, -2.0).is_err());
        // 170! overflows f64; the ratio does not.
        assert_relative_eq!(
            log_gamma_ratio(200.0, 199.0).unwrap(),
            199f64.ln(),
            max_relative = 1e-10
        );
    }

    #[test]
    fn sinc_taylor_branch_is_continuous() {
        assert_eq!(sinc(0.0), 1.0);
        let x = 0.999e-4;
        assert_relative_eq!(sinc(x), x.sin() / x, max_relative = 1e-15);
    }

    proptest! {
        #[test]
        fn hermite_parity(n in 0u32..=20, x in -4.0f64..4.0) {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let a = hermite(n, -x);
            let b = sign * hermite(n, x);
            prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
        }

        #[test]
        fn harmonic_modulus_is_azimuth_free(l in 0u32..6, mraw in 0i32..11, theta in 0.0f64..PI, p1 in 0.0f64..6.3, p2 in 0.0f64..6.3) {
            let m = mraw % (2 * l as i32 + 1) - l as i32;
            let a = spherical_harmonic(l, m, theta, p1).unwrap().norm();
            let b = spherical_harmonic(l, m, theta, p2).unwrap().norm();
            prop_assert!((a - b).abs() <= 1e-13);
        }
    }
}
