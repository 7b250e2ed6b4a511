use std::hint::black_box;

use chromastat::oracle::{oracle_summary, OracleConfig};
use chromastat::{chromatic_number, max_sum_coloring, min_sum_coloring, summarize, FamilySpec, SearchConfig};
use chromastat_bench::{family, sparse_random};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn chromatic(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    let mut group = c.benchmark_group("chromatic_number");
    for n in [8, 16, 32] {
        let g = family(FamilySpec::Wheel(n));
        group.bench_with_input(BenchmarkId::new("wheel", n), &g, |b, g| b.iter(|| chromatic_number(black_box(g), &cfg)));
    }
    for (g, n) in sparse_random(&[16, 24, 32], 1).iter().zip([16, 24, 32]) {
        group.bench_with_input(BenchmarkId::new("sparse", n), g, |b, g| b.iter(|| chromatic_number(black_box(g), &cfg)));
    }
    group.finish();
}

fn sum_extremes(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    let mut group = c.benchmark_group("sum_coloring");
    for n in [9, 13, 17] {
        let g = family(FamilySpec::Cycle(n));
        group.bench_with_input(BenchmarkId::new("min/cycle", n), &g, |b, g| b.iter(|| min_sum_coloring(black_box(g), &cfg)));
        group.bench_with_input(BenchmarkId::new("max/cycle", n), &g, |b, g| b.iter(|| max_sum_coloring(black_box(g), &cfg)));
    }
    for n in [9, 12, 15] {
        let g = family(FamilySpec::Wheel(n));
        group.bench_with_input(BenchmarkId::new("min/wheel", n), &g, |b, g| b.iter(|| min_sum_coloring(black_box(g), &cfg)));
    }
    for (g, n) in sparse_random(&[10, 14, 18], 2).iter().zip([10, 14, 18]) {
        group.bench_with_input(BenchmarkId::new("min/sparse", n), g, |b, g| b.iter(|| min_sum_coloring(black_box(g), &cfg)));
    }
    group.finish();
}

fn engine_vs_oracle(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    let oracle = OracleConfig::default();
    let g = family(FamilySpec::Wheel(8));
    let mut group = c.benchmark_group("summary/wheel8");
    group.bench_function("engine", |b| b.iter(|| summarize(black_box(&g), &cfg)));
    group.bench_function("oracle", |b| b.iter(|| oracle_summary(black_box(&g), &oracle)));
    group.finish();
}

criterion_group!(benches, chromatic, sum_extremes, engine_vs_oracle);
criterion_main!(benches);
