use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use confluence_core::numeric::{eval_hyperlog, eval_mzv, PrecisionConfig};
use confluence_core::Word;

fn mzv(c: &mut Criterion) {
    let mut g = c.benchmark_group("eval_mzv");
    for digits in [30, 60] {
        let cfg = PrecisionConfig::new(digits).unwrap();
        for w in ["100", "11010"] {
            let word: Word = w.parse().unwrap();
            g.bench_with_input(BenchmarkId::new(w, digits), &word, |b, word| {
                b.iter(|| eval_mzv(black_box(word), &cfg).unwrap())
            });
        }
    }
    g.finish();
}

fn hyperlog(c: &mut Criterion) {
    let mut g = c.benchmark_group("eval_hyperlog");
    g.sample_size(20);
    let cfg = PrecisionConfig::new(30).unwrap();
    let z = cfg.real(3.0);
    for w in ["z10", "1z1z0"] {
        let word: Word = w.parse().unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(w), &word, |b, word| {
            b.iter(|| eval_hyperlog(black_box(word), &z, &cfg).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, mzv, hyperlog);
criterion_main!(benches);
