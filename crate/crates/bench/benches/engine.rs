//! Criterion benches for the hot paths of the engine:
//! - the fixed-point graph sum at degrees one and two,
//! - the decorated-tree census,
//! - cotangent-class integrals on the moduli of marked rational curves,
//! - hypergeometric series construction,
//! - the pole-walking recursion at low q-order.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use quintic_mirror::equivariant::AlphaSpec;
use quintic_mirror::exact::Rat;
use quintic_mirror::graphsum::{correlator, enumerate_graphs};
use quintic_mirror::gw::{gw_i_function, mirror_tau, solve_recursion};
use quintic_mirror::psi::psi_integral;

fn bench_correlator(c: &mut Criterion) {
    let alpha = AlphaSpec::default_quintic();
    let mut group = c.benchmark_group("correlator");
    for degree in [1u32, 2] {
        group.bench_with_input(BenchmarkId::from_parameter(degree), &degree, |b, &d| {
            b.iter(|| correlator(d, &[], &alpha).unwrap())
        });
    }
    group.finish();
}

fn bench_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    for (marks, degree) in [(0usize, 2u32), (1, 2), (0, 3)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("n{marks}_d{degree}")),
            &(marks, degree),
            |b, &(n, d)| b.iter(|| enumerate_graphs(n, d).len()),
        );
    }
    group.finish();
}

fn bench_psi_integral(c: &mut Criterion) {
    c.bench_function("psi_integral_n8", |b| {
        b.iter(|| psi_integral(&[5, 0, 0, 0, 0, 0, 0, 0]).unwrap())
    });
}

fn bench_series(c: &mut Criterion) {
    c.bench_function("gw_i_function_order_12", |b| b.iter(|| gw_i_function(12)));
}

fn bench_recursion(c: &mut Criterion) {
    let alpha = AlphaSpec::new(vec![
        Rat::frac(5, 2),
        Rat::from_int(-7),
        Rat::frac(13, 3),
        Rat::from_int(29),
        Rat::frac(-61, 4),
    ])
    .unwrap();
    c.bench_function("solve_recursion_q2", |b| {
        b.iter(|| solve_recursion(&alpha, &mirror_tau(2), 2).unwrap())
    });
}

criterion_group!(
    benches,
    bench_correlator,
    bench_census,
    bench_psi_integral,
    bench_series,
    bench_recursion
);
criterion_main!(benches);
