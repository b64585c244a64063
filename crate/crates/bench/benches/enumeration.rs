use std::hint::black_box;
use std::ops::ControlFlow;

use criterion::{criterion_group, criterion_main, Criterion};

use compgraph::enumerate::{census, Filter};
use compgraph::{OrientationUniverse, PartiteShape, Prune};

fn shape(sizes: &[usize]) -> PartiteShape {
    PartiteShape::new(sizes.iter().copied()).unwrap()
}

fn bench_streaming(c: &mut Criterion) {
    let u = OrientationUniverse::new(&shape(&[2, 2, 2]));
    c.bench_function("visit_k222_all", |b| {
        b.iter(|| {
            let mut edges = 0usize;
            u.visit(Prune::None, |view| {
                edges += view.competition_edge_count();
                ControlFlow::Continue(())
            })
            .unwrap();
            black_box(edges)
        })
    });
}

fn bench_census(c: &mut Criterion) {
    let k321 = OrientationUniverse::new(&shape(&[3, 2, 1]));
    c.bench_function("census_k321_triangle_free_unpruned", |b| {
        b.iter(|| black_box(census(&k321, Filter::TriangleFree, Prune::None).unwrap()))
    });
    c.bench_function("census_k321_triangle_free_pruned", |b| {
        b.iter(|| black_box(census(&k321, Filter::TriangleFree, Prune::IndegreeLe2).unwrap()))
    });
    let k63 = OrientationUniverse::new(&shape(&[6, 3]));
    c.bench_function("census_k63_triangle_free_pruned", |b| {
        b.iter(|| black_box(census(&k63, Filter::TriangleFree, Prune::IndegreeLe2).unwrap()))
    });
}

fn bench_tournaments(c: &mut Criterion) {
    c.bench_function("min_competition_edges_n6", |b| {
        b.iter(|| black_box(compgraph::verifier::min_competition_edges(6)))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = bench_streaming, bench_census, bench_tournaments
}
criterion_main!(benches);
