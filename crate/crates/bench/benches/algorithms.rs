use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use gammatch_core::brute_force::{nm_polynomial, nm_y_polynomials_dp};
use gammatch_core::egf::{egf_formal_x_power, egf_reciprocal, EgfSeries};
use gammatch_core::reciprocity::{recursion_sequence, recursion_sequence_uncached, theta_h_direct};
use gammatch_core::tabloids::{fixed_point_signed_sum, signed_sum_over_objects};
use gammatch_core::FamilySpec;

const GAMMA22: FamilySpec = FamilySpec::GammaK1K2 { k1: 2, k2: 2 };

fn brute_force(c: &mut Criterion) {
    let g = GAMMA22.pattern_set().unwrap();
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    for n in [7, 8, 9] {
        group.bench_with_input(BenchmarkId::new("dfs", n), &n, |b, &n| b.iter(|| nm_polynomial(black_box(n), &g).unwrap()));
    }
    group.bench_function("prefix count n=12", |b| b.iter(|| nm_y_polynomials_dp(&g, black_box(12)).unwrap()));
    group.finish();
}

fn recursion(c: &mut Criterion) {
    let mut group = c.benchmark_group("recursion");
    for spec in [GAMMA22, FamilySpec::GammaK1K1S { k1: 2, s: 3 }, FamilySpec::Tau142536] {
        group.bench_function(spec.to_string(), |b| b.iter(|| recursion_sequence_uncached(spec, black_box(40)).unwrap()));
    }
    group.finish();
}

fn series(c: &mut Criterion) {
    let u = EgfSeries::new(recursion_sequence(GAMMA22, 12).unwrap()).unwrap();
    let mut group = c.benchmark_group("series");
    group.bench_function("reciprocal order 12", |b| b.iter(|| egf_reciprocal(black_box(&u), 12).unwrap()));
    let nm = egf_reciprocal(&u, 8).unwrap();
    group.sample_size(10);
    group.bench_function("formal x-power order 8", |b| b.iter(|| egf_formal_x_power(black_box(&nm), 8).unwrap()));
    group.finish();
}

fn tabloids(c: &mut Criterion) {
    let g = GAMMA22.pattern_set().unwrap();
    let mut group = c.benchmark_group("tabloids");
    group.sample_size(10);
    group.bench_function("fixed points n=9", |b| b.iter(|| fixed_point_signed_sum(&g, black_box(9)).unwrap()));
    group.bench_function("all objects n=7", |b| b.iter(|| signed_sum_over_objects(&g, black_box(7)).unwrap()));
    group.bench_function("theta_h direct n=9", |b| b.iter(|| theta_h_direct(&g, black_box(9)).unwrap()));
    group.finish();
}

criterion_group!(benches, brute_force, recursion, series, tabloids);
criterion_main!(benches);
