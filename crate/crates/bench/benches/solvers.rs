use criterion::{criterion_group, criterion_main, Criterion};
use eigenwell_bench::{harmonic_problem, hydrogen_problem};
use eigenwell_core::bic::{verify_eigen_residual, BICSpec, Scheme};
use eigenwell_core::sturm_liouville::find_eigenvalue;
use eigenwell_core::specfun::{hermite, spherical_harmonic};
use eigenwell_core::GridSpec;
use std::hint::black_box;

fn shooting(c: &mut Criterion) {
    let ho = harmonic_problem(6, 1e-3).unwrap();
    c.bench_function("numerov_ho_n5", |b| b.iter(|| find_eigenvalue(black_box(&ho), 5).unwrap()));
    let h = hydrogen_problem(3, 1e-3).unwrap();
    c.bench_function("numerov_hydrogen_3s", |b| b.iter(|| find_eigenvalue(black_box(&h), 2).unwrap()));
}

fn special_functions(c: &mut Criterion) {
    c.bench_function("hermite_20", |b| b.iter(|| hermite(20, black_box(1.3))));
    c.bench_function("ylm_6_3", |b| {
        b.iter(|| spherical_harmonic(6, 3, black_box(0.7), black_box(1.1)).unwrap())
    });
}

fn bic_residual(c: &mut Criterion) {
    let spec = BICSpec::new(Scheme::StillingerHerrick, 1.0, 1.0).unwrap();
    let grid = GridSpec::with_step(1e-3, 20.0, 1e-3).unwrap();
    c.bench_function("bic_residual_sh", |b| b.iter(|| verify_eigen_residual(&spec, &grid).unwrap()));
}

criterion_group!(benches, shooting, special_functions, bic_residual);
criterion_main!(benches);
