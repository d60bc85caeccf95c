use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use confluence_core::confluence::{generate_confluence, Mode};
use confluence_core::linalg::span_of;

fn generation(c: &mut Criterion) {
    let mut g = c.benchmark_group("generate_confluence");
    g.sample_size(10);
    for k in [4, 5, 6] {
        g.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| generate_confluence(k, Mode::Shuffle).unwrap())
        });
    }
    g.finish();
}

fn rank(c: &mut Criterion) {
    let mut g = c.benchmark_group("echelon_rank");
    g.sample_size(10);
    for k in [5, 6, 7] {
        let recs = generate_confluence(k, Mode::Shuffle).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(k), &recs, |b, recs| {
            b.iter(|| span_of(recs.iter().map(|r| &r.body), k).unwrap().rank())
        });
    }
    g.finish();
}

criterion_group!(benches, generation, rank);
criterion_main!(benches);
