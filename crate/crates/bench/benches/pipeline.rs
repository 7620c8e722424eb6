use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use clttf_core::present::{presentation, verify_presentation, PresentedGroup};
use clttf_core::{chunk_tree, fixtures, iso_group, twist_class};

fn bench_chunk_tree(c: &mut Criterion) {
    let mut group = c.benchmark_group("chunk_tree");
    for (name, g) in [("g6", fixtures::g6()), ("g13", fixtures::g13())] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| chunk_tree(g).unwrap())
        });
    }
    group.finish();
}

fn bench_twist_class(c: &mut Criterion) {
    let mut group = c.benchmark_group("twist_class");
    for (name, g) in [("g6", fixtures::g6()), ("g13", fixtures::g13())] {
        let tree = chunk_tree(&g).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &tree, |b, tree| {
            b.iter(|| twist_class(tree))
        });
    }
    group.finish();
}

fn bench_iso_group(c: &mut Criterion) {
    let mut group = c.benchmark_group("iso_group");
    for (name, g) in [("g6", fixtures::g6()), ("g13", fixtures::g13())] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| iso_group(g).unwrap())
        });
    }
    group.finish();
}

fn bench_presentation(c: &mut Criterion) {
    let g13 = fixtures::g13();
    let iso = iso_group(&g13).unwrap();
    c.bench_function("out_presentation/g13", |b| {
        b.iter(|| presentation(&iso, PresentedGroup::Out))
    });
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (name, g) in [("g6", fixtures::g6()), ("g13", fixtures::g13())] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| verify_presentation(g, Default::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_chunk_tree,
    bench_twist_class,
    bench_iso_group,
    bench_presentation,
    bench_verify
);
criterion_main!(benches);
