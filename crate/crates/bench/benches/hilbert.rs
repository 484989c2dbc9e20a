//! Benchmarks: exact rank over the prime field, the brute-force difference
//! function of nine general double points, and the full verification path
//! for points on a smooth cubic.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use fatpoints_bench::{nine_general_double, random_matrix, smooth_cubic_double};
use fatpoints_core::geometry::{difference_function, ideal_dim};

fn bench_rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank_mod_q");
    for (rows, cols) in [(27, 28), (63, 136), (90, 171)] {
        let m = random_matrix(rows, cols, 17);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{rows}x{cols}")),
            &m,
            |b, m| b.iter(|| black_box(m.rank())),
        );
    }
    group.finish();
}

fn bench_nine_double(c: &mut Criterion) {
    let scheme = nine_general_double(1);
    c.bench_function("difference_function_nine_double", |b| {
        b.iter(|| black_box(difference_function(&scheme).expect("stabilizes")))
    });
    c.bench_function("ideal_dim_nine_double_degree6", |b| {
        b.iter(|| black_box(ideal_dim(&scheme, 6).expect("valid degree")))
    });
}

fn bench_smooth_cubic(c: &mut Criterion) {
    let mut group = c.benchmark_group("smooth_cubic_double");
    group.sample_size(20);
    for n in [12usize, 15] {
        let scheme = smooth_cubic_double(n, 3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &scheme, |b, s| {
            b.iter(|| black_box(difference_function(s).expect("stabilizes")))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_rank, bench_nine_double, bench_smooth_cubic);
criterion_main!(benches);
