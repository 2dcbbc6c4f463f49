//! Quadrature rules used by the production code paths.

use std::f64::consts::PI;

/// Nodes and weights of the `n`-point Gauss–Legendre rule on [-1, 1].
///
/// Newton iteration on the Legendre three-term recurrence, seeded with the
/// Chebyshev-like asymptotic guess.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "Gauss-Legendre needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        dp = if d != 0.0 { d } else { dp };
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Integrates `f` over [a, b] with an `n`-point Gauss–Legendre rule.
pub fn integrate_gauss_legendre<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let (x, w) = gauss_legendre(n);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (b + a);
    x.iter()
        .zip(&w)
        .map(|(&t, &wt)| wt * f(mid + half * t))
        .sum::<f64>()
        * half
}

/// Gauss–Chebyshev rule of the second kind:
/// `∫_{-1}^{1} √(1-t²) g(t) dt ≈ Σ w_i g(t_i)`.
pub fn gauss_chebyshev_second<F: Fn(f64) -> f64>(g: F, n: usize) -> f64 {
    let np1 = (n + 1) as f64;
    (1..=n)
        .map(|i| {
            let theta = i as f64 * PI / np1;
            let s = theta.sin();
            PI / np1 * s * s * g(theta.cos())
        })
        .sum()
}

/// Composite Simpson rule on uniformly spaced samples.
///
/// An even number of intervals uses plain Simpson; an odd number closes the
/// last three intervals with the 3/8 rule. Two samples fall back to the
/// trapezoid.
pub fn simpson(samples: &[f64], h: f64) -> f64 {
    let n = samples.len();
    match n {
        0 | 1 => 0.0,
        2 => 0.5 * h * (samples[0] + samples[1]),
        3 => h / 3.0 * (samples[0] + 4.0 * samples[1] + samples[2]),
        _ => {
            let intervals = n - 1;
            if intervals % 2 == 0 {
                simpson_even(samples, h)
            } else {
                let head = &samples[..n - 3];
                let tail = &samples[n - 4..];
                let three_eighths =
                    3.0 * h / 8.0 * (tail[0] + 3.0 * tail[1] + 3.0 * tail[2] + tail[3]);
                let head_val = if head.len() >= 3 {
                    simpson_even(head, h)
                } else {
                    0.0
                };
                head_val + three_eighths
            }
        }
    }
}

fn simpson_even(samples: &[f64], h: f64) -> f64 {
    let n = samples.len();
    let mut acc = samples[0] + samples[n - 1];
    for (i, v) in samples.iter().enumerate().take(n - 1).skip(1) {
        acc += if i % 2 == 1 { 4.0 * v } else { 2.0 * v };
    }
    acc * h / 3.0
}
