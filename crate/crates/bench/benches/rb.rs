use criterion::{criterion_group, criterion_main, Criterion};
use sweedler_rb::algebra::{h4_minus, lm2, lm3};
use sweedler_rb::search::{enumerate_all, SearchConfig};
use sweedler_rb::{Catalog, Fp};

fn symbolic(c: &mut Criterion) {
    let catalog = Catalog::builtin();
    c.bench_function("verify lm2.1.10", |b| b.iter(|| catalog.verify("lm2.1.10").unwrap()));
    c.bench_function("verify th2.vi", |b| b.iter(|| catalog.verify("th2.vi").unwrap()));
}

fn scans(c: &mut Criterion) {
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    let seq = SearchConfig::sequential();
    g.bench_function("lm2 F3", |b| b.iter(|| enumerate_all(&lm2(), Fp::<3>::new(1), &seq).unwrap()));
    g.bench_function("lm3 F5", |b| b.iter(|| enumerate_all(&lm3(), Fp::<5>::new(1), &seq).unwrap()));
    g.bench_function("h4minus F3", |b| {
        b.iter(|| enumerate_all(&h4_minus(), Fp::<3>::new(1), &SearchConfig::default()).unwrap())
    });
    g.finish();
}

criterion_group!(benches, symbolic, scans);
criterion_main!(benches);
