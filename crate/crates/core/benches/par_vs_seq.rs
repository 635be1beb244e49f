//! Build-time comparison between the rayon-backed data-parallel paths and
//! their always-sequential counterparts. Outputs are identical by
//! construction (per-index RNG streams), so the interesting number is the
//! wall-clock ratio. Without the `parallel` feature the default builders
//! degrade to sequential and the two sides coincide.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use ftso::gen;
use ftso::preserver::{
    build_detour_oracle, build_detour_oracle_seq, build_preserver_caps, DetourBackend,
    PreserverCaps,
};
use ftso::sampling_oracle::{build_sampling_oracle, build_sampling_oracle_seq};

fn bench_sampling_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("sampling_build");
    group.sample_size(10);
    for (n, m) in [(30usize, 90usize), (50, 150)] {
        let g = gen::gnm(n, m, true, 0xBE11).unwrap();
        group.bench_with_input(BenchmarkId::new("par", n), &g, |b, g| {
            b.iter(|| build_sampling_oracle(black_box(g), 2, 5, 7).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("seq", n), &g, |b, g| {
            b.iter(|| build_sampling_oracle_seq(black_box(g), 2, 5, 7).unwrap())
        });
    }
    group.finish();
}

fn bench_preserver_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("preserver_build");
    group.sample_size(10);
    let g = gen::layered_dag(8, 4, 0.4, 0.4, 0xD06).unwrap();
    let caps = PreserverCaps {
        max_edges: 128,
        max_failure_sets: 5_000_000,
    };
    group.bench_function("par", |b| {
        b.iter(|| build_preserver_caps(black_box(&g), 0, 1, 4, caps, false).unwrap())
    });
    group.bench_function("seq", |b| {
        b.iter(|| build_preserver_caps(black_box(&g), 0, 1, 4, caps, true).unwrap())
    });
    group.finish();
}

fn bench_detour_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("detour_build_algebraic");
    group.sample_size(10);
    let g = gen::layered_dag(8, 4, 0.4, 0.4, 0xD07).unwrap();
    let backend = DetourBackend::Algebraic { seed: 3 };
    group.bench_function("par", |b| {
        b.iter(|| build_detour_oracle(black_box(&g), 0, 2, 3, backend).unwrap())
    });
    group.bench_function("seq", |b| {
        b.iter(|| build_detour_oracle_seq(black_box(&g), 0, 2, 3, backend).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_sampling_build,
    bench_preserver_build,
    bench_detour_build
);
criterion_main!(benches);
