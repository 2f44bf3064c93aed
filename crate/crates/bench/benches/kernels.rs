use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use oddspec_bench::{cycle_attached, path_replaced, ORDERS};
use oddspec_core::cycles::{cycle_spectrum, DEFAULT_BUDGET};
use oddspec_core::density::mad;
use oddspec_core::search::enumerate_codes;
use oddspec_core::spectral::{compare_spectral_radii, exact_enclosure, perron, DEFAULT_TOL};
use std::hint::black_box;

fn bench_perron(c: &mut Criterion) {
    let mut group = c.benchmark_group("perron");
    for n in ORDERS {
        let g = cycle_attached(n, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| perron(black_box(g), DEFAULT_TOL))
        });
    }
    group.finish();
}

fn bench_exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_enclosure");
    group.sample_size(10);
    for n in [16, 32] {
        let g = path_replaced(n, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| exact_enclosure(black_box(g)))
        });
    }
    group.finish();
    let (a, b) = (cycle_attached(16, 1), cycle_attached(16, 2));
    c.bench_function("compare/16", |bench| {
        bench.iter(|| compare_spectral_radii(black_box(&a), black_box(&b)))
    });
}

fn bench_cycles(c: &mut Criterion) {
    let mut group = c.benchmark_group("cycle_spectrum");
    group.sample_size(10);
    for n in [12, 16, 20] {
        let g = cycle_attached(n, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| cycle_spectrum(black_box(g), DEFAULT_BUDGET))
        });
    }
    group.finish();
}

fn bench_mad(c: &mut Criterion) {
    let mut group = c.benchmark_group("mad");
    for n in ORDERS {
        let g = path_replaced(n, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| mad(black_box(g)))
        });
    }
    group.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in [6, 7] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_codes(n))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_perron,
    bench_exact,
    bench_cycles,
    bench_mad,
    bench_enumeration
);
criterion_main!(benches);
