//! Sequential versus rayon execution of the data-parallel kernels.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use zetaops::algebra::{rat, SWindow, XSeries};
use zetaops::par::Exec;
use zetaops::reduction::generating_series;
use zetaops::verify::{check_corollary_numeric, check_lemma_suite, check_main_theorem, LemmaConfig};

const PATHS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn series_product(c: &mut Criterion) {
    let n = 150;
    let f = XSeries::from_coeffs((0..=n).map(|k| rat(k as i64 + 1, 3 * k as i64 + 2)).collect());
    let g = XSeries::from_coeffs((0..=n).map(|k| rat(2 - k as i64, k as i64 + 5)).collect());
    let mut group = c.benchmark_group("series_product");
    for (name, exec) in PATHS {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| black_box(f.times_with(exec, &g))));
    }
    group.finish();
}

fn operator_action(c: &mut Criterion) {
    let mut group = c.benchmark_group("d1_on_gamma_ratio");
    group.sample_size(10);
    let order = 6;
    let window = SWindow::new(-10, 12);
    for (name, exec) in PATHS {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(generating_series(order, 11, window, exec).unwrap()))
        });
    }
    group.finish();
}

fn checks(c: &mut Criterion) {
    let mut group = c.benchmark_group("checks");
    group.sample_size(10);
    for (name, exec) in PATHS {
        group.bench_function(BenchmarkId::new("main_theorem_8", name), |b| {
            b.iter(|| black_box(check_main_theorem(8, 8, exec).unwrap()))
        });
        let cfg = LemmaConfig { order: 6, trials: 20, seed: 1 };
        group.bench_function(BenchmarkId::new("lemma_suite_6", name), |b| {
            b.iter(|| black_box(check_lemma_suite(&cfg, exec).unwrap()))
        });
        group.bench_function(BenchmarkId::new("corollary_numeric_30", name), |b| {
            b.iter(|| black_box(check_corollary_numeric(4, 3, 30, exec).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, series_product, operator_action, checks);
criterion_main!(benches);
