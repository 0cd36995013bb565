//! Sequential versus rayon-parallel execution of the enumeration pipeline.
//!
//! `cargo bench -p metric-lines` runs every group; pass
//! `--no-default-features` to benchmark a build without rayon, where both
//! executors take the sequential path.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use metric_lines::verifier::VerifyOptions;
use metric_lines::{canonical_form, verify_theorem, EnumerationCursor, Enumerator, Executor, Graph, GraphSource};

fn executors() -> [(&'static str, Executor); 2] {
    [("sequential", Executor::sequential()), ("parallel", Executor::new(0))]
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_connected");
    group.sample_size(10);
    for n in [7, 8] {
        for (name, exec) in executors() {
            let enumerator = Enumerator::new(exec);
            let cursor = EnumerationCursor::connected(n);
            group.bench_with_input(BenchmarkId::new(name, n), &cursor, |b, cursor| {
                b.iter(|| enumerator.fold(cursor, || 0u64, |acc, _| acc + 1, |a, b| a + b).unwrap().1)
            });
        }
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_theorem");
    group.sample_size(10);
    for n in [7, 8] {
        for (name, exec) in executors() {
            let opts = VerifyOptions { diameter: 2, exec };
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| verify_theorem(n, &GraphSource::Builtin, &opts).unwrap().exceptions.len())
            });
        }
    }
    group.finish();
}

fn canonization(c: &mut Criterion) {
    let graphs: Vec<(&str, Graph)> = vec![
        ("petersen", Graph::petersen()),
        ("cycle12", Graph::cycle(12).unwrap()),
        ("complete10", Graph::complete(10).unwrap()),
    ];
    let mut group = c.benchmark_group("canonical_form");
    for (name, g) in &graphs {
        group.bench_with_input(BenchmarkId::from_parameter(name), g, |b, g| {
            b.iter(|| canonical_form(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, verification, canonization);
criterion_main!(benches);
