use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use compgraph::families::{build_pattern, Component};
use compgraph::graph::cycle;
use compgraph::{classify, Graph};

fn bench_canonical_forms(c: &mut Criterion) {
    let c6 = cycle(6);
    c.bench_function("canonical_form_c6", |b| b.iter(|| black_box(c6.canonical_form())));
    let paths =
        build_pattern(&[Component::Path(2); 4], 0).expect("valid pattern");
    c.bench_function("canonical_form_p2x4", |b| b.iter(|| black_box(paths.canonical_form())));
    let empty = Graph::empty(9).unwrap();
    c.bench_function("canonical_form_empty9", |b| b.iter(|| black_box(empty.canonical_form())));
}

fn bench_classify(c: &mut Criterion) {
    let p3p2 = build_pattern(&[Component::Path(3), Component::Path(2)], 0).unwrap();
    c.bench_function("classify_p3_p2", |b| b.iter(|| black_box(classify(&p3p2).unwrap())));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = bench_canonical_forms, bench_classify
}
criterion_main!(benches);
