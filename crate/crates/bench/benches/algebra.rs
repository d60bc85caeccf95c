use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use confluence_core::algebra::{shuffle, stuffle};
use confluence_core::regularization::{reg_shuffle, reg_z1};
use confluence_core::NCPoly;

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("products");
    for (u, v) in [("10", "z10"), ("1010", "z1z0"), ("11010", "z10z0")] {
        let (pu, pv): (NCPoly, NCPoly) = (u.parse().unwrap(), v.parse().unwrap());
        let label = format!("{u}x{v}");
        g.bench_with_input(
            BenchmarkId::new("shuffle", &label),
            &(&pu, &pv),
            |b, (x, y)| b.iter(|| shuffle(black_box(x), black_box(y))),
        );
        g.bench_with_input(
            BenchmarkId::new("stuffle", &label),
            &(&pu, &pv),
            |b, (x, y)| b.iter(|| stuffle(black_box(x), black_box(y)).unwrap()),
        );
    }
    g.finish();
}

fn regularization(c: &mut Criterion) {
    let mut g = c.benchmark_group("regularization");
    for w in ["1z1z0", "z11z10", "1z01z10"] {
        let p: NCPoly = w.parse().unwrap();
        g.bench_with_input(BenchmarkId::new("reg_z1", w), &p, |b, p| {
            b.iter(|| reg_z1(black_box(p)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("reg_shuffle", w), &p, |b, p| {
            b.iter(|| reg_shuffle(black_box(p)))
        });
    }
    g.finish();
}

criterion_group!(benches, products, regularization);
criterion_main!(benches);
