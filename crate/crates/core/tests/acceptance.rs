//! Acceptance suite: the headline results, each re-derived exhaustively
//! through the public API. Run with `--nocapture` to see one line per
//! criterion.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use compgraph::classifier;
use compgraph::enumerate::{census, Filter};
use compgraph::families::{self, build_pattern, match_components, pattern_name, Component};
use compgraph::graph::{cycle, path, star};
use compgraph::verifier::min_competition_edges;
use compgraph::{
    CanonicalForm, CheckRegistry, Census, Graph, OrientationUniverse, PartiteShape, Prune,
    WitnessId,
};
use Component::{Cycle, Path, Star3, G1, G2, G3, G4};

fn shape(sizes: &[usize]) -> PartiteShape {
    PartiteShape::new(sizes.iter().copied()).unwrap()
}

fn union_census(shapes: &[PartiteShape], filter: Filter) -> Census {
    let mut acc = Census::new(filter.name(), 0);
    for s in shapes {
        let u = OrientationUniverse::new(s);
        acc.union(&census(&u, filter, Prune::IndegreeLe2).unwrap());
    }
    acc
}

fn forms(patterns: &[(&[Component], usize)]) -> BTreeSet<CanonicalForm> {
    patterns
        .iter()
        .map(|&(comps, iso)| build_pattern(comps, iso).unwrap().canonical_form())
        .collect()
}

fn key_set(c: &Census) -> BTreeSet<CanonicalForm> {
    c.keys().cloned().collect()
}

fn describe(set: &BTreeSet<CanonicalForm>) -> Vec<String> {
    set.iter()
        .map(|f| {
            let g = f.to_graph().unwrap();
            match match_components(&g) {
                Some((comps, iso)) => pattern_name(&comps, iso),
                None => format!("unrecognized(order {})", g.order()),
            }
        })
        .collect()
}

fn pass(criterion: &str, detail: String) {
    println!("criterion {criterion}: PASS ({detail})");
}

/// No orientation of the complete tripartite graph with parts (4,2,1) has a
/// triangle-free competition graph; verified both pruned and unpruned.
#[test]
fn acceptance_01_k421_impossibility() {
    let u = OrientationUniverse::new(&shape(&[4, 2, 1]));
    assert_eq!(u.size(), 16384);
    let pruned = census(&u, Filter::TriangleFree, Prune::IndegreeLe2).unwrap();
    let unpruned = census(&u, Filter::TriangleFree, Prune::None).unwrap();
    assert!(pruned.is_empty(), "triangle-free classes found: {:?}", describe(&key_set(&pruned)));
    assert_eq!(pruned, unpruned);
    pass("01 K4,2,1 impossibility", format!("universe {}", u.size()));
}

/// The connected triangle-free tripartite competition graphs are exactly
/// G1, G2, G3, G4, P6 and C6.
#[test]
fn acceptance_02_connected_tripartite_census() {
    let mut shapes = vec![shape(&[2, 2, 1]), shape(&[2, 2, 2]), shape(&[3, 2, 1])];
    for m in 1..=6 {
        shapes.push(shape(&[m, 1, 1]));
    }
    let c = union_census(&shapes, Filter::TriangleFreeConnected);
    let expected = forms(&[
        (&[G1], 0),
        (&[G2], 0),
        (&[G3], 0),
        (&[G4], 0),
        (&[Path(6)], 0),
        (&[Cycle(6)], 0),
    ]);
    assert_eq!(key_set(&c), expected, "got {:?}", describe(&key_set(&c)));
    pass("02 connected tripartite census", format!("classes {:?}", describe(&expected)));
}

/// The connected triangle-free 4-partite competition graphs are exactly
/// P5, the 3-leaf star, and the chair.
#[test]
fn acceptance_03_connected_4partite_census() {
    let shapes = [shape(&[1, 1, 1, 1]), shape(&[2, 1, 1, 1])];
    let c = union_census(&shapes, Filter::TriangleFreeConnected);
    let expected = forms(&[(&[Path(5)], 0), (&[Star3], 0), (&[G2], 0)]);
    assert_eq!(key_set(&c), expected, "got {:?}", describe(&key_set(&c)));
    pass("03 connected 4-partite census", format!("classes {:?}", describe(&expected)));
}

/// Among all 1024 labeled 5-tournaments, the ones with triangle-free
/// competition graphs are precisely the regular ones, and each competition
/// graph is a 5-cycle.
#[test]
fn acceptance_04_five_tournaments() {
    let u = compgraph::tournaments(5).unwrap();
    assert_eq!(u.size(), 1024);
    let c5 = cycle(5).canonical_form();
    let mut triangle_free = 0u64;
    let mut regular = 0u64;
    u.visit(Prune::None, |view| {
        let tf = view.triangle_free();
        let reg = (0..5).all(|v| view.outdegree(v) == 2);
        if reg {
            regular += 1;
        }
        if tf {
            triangle_free += 1;
            assert!(reg, "triangle-free but not regular: {:?}", view.to_digraph());
            assert_eq!(view.to_competition_graph().canonical_form(), c5);
        }
        ControlFlow::Continue(())
    })
    .unwrap();
    assert_eq!(triangle_free, regular);
    pass(
        "04 5-tournaments",
        format!("{triangle_free} triangle-free = {regular} regular, all give C5"),
    );
}

/// Every one of the 32768 labeled 6-tournaments has a triangle in its
/// competition graph.
#[test]
fn acceptance_05_k6_forces_triangle() {
    let u = compgraph::tournaments(6).unwrap();
    assert_eq!(u.size(), 32768);
    let mut checked = 0u64;
    u.visit(Prune::None, |view| {
        assert!(!view.triangle_free(), "triangle-free 6-tournament: {:?}", view.to_digraph());
        checked += 1;
        ControlFlow::Continue(())
    })
    .unwrap();
    assert_eq!(checked, 32768);
    pass("05 6-tournaments force triangles", format!("{checked} tournaments checked"));
}

/// The disconnected triangle-free 4-partite competition graphs are exactly
/// P3+P2 and P3+I1.
#[test]
fn acceptance_06_disconnected_4partite_census() {
    let shapes = [shape(&[1, 1, 1, 1]), shape(&[2, 1, 1, 1])];
    let c = union_census(&shapes, Filter::TriangleFreeDisconnected);
    let expected = forms(&[(&[Path(3), Path(2)], 0), (&[Path(3)], 1)]);
    assert_eq!(key_set(&c), expected, "got {:?}", describe(&key_set(&c)));
    pass("06 disconnected 4-partite census", format!("classes {:?}", describe(&expected)));
}

/// Over every bipartite shape with at most 9 vertices, the triangle-free
/// competition graphs are exactly the eleven bipartite families, and every
/// family instance fitting in 9 vertices occurs.
#[test]
fn acceptance_07_bounded_bipartite_theorem() {
    let max_order = 9usize;
    let mut shapes = Vec::new();
    for order in 2..=max_order {
        shapes.extend(classifier::all_shapes(order, 2));
    }
    let c = union_census(&shapes, Filter::TriangleFree);
    let mut patterns: Vec<(Vec<Component>, usize)> = Vec::new();
    for order in 2..=max_order {
        patterns.push((vec![], order)); // (a) empty graphs
    }
    for j in 1..=max_order {
        patterns.push((vec![Path(2)], j)); // (b)
        patterns.push((vec![Path(2), Path(2)], j)); // (c)
        patterns.push((vec![Path(3), Path(2)], j)); // (d)
        patterns.push((vec![Path(2), Path(2), Path(2)], j)); // (e)
    }
    patterns.push((vec![Path(3)], 2)); // (f)
    patterns.push((vec![Path(3), Path(3)], 0)); // (g)
    patterns.push((vec![Path(4), Path(3)], 0)); // (h)
    patterns.push((vec![Path(3), Path(2), Path(2)], 0)); // (i)
    patterns.push((vec![Cycle(4), Cycle(4)], 0)); // (j)
    patterns.push((vec![Path(2), Path(2), Path(2), Path(2)], 0)); // (k)
    let expected: BTreeSet<CanonicalForm> = patterns
        .iter()
        .filter(|(comps, iso)| comps.iter().map(|c| c.order()).sum::<usize>() + iso <= max_order)
        .map(|(comps, iso)| build_pattern(comps, *iso).unwrap().canonical_form())
        .collect();
    let got = key_set(&c);
    let extra: Vec<String> = describe(&got.difference(&expected).cloned().collect());
    let missing: Vec<String> = describe(&expected.difference(&got).cloned().collect());
    assert!(extra.is_empty() && missing.is_empty(), "extra {extra:?}, missing {missing:?}");
    pass(
        "07 bounded bipartite theorem",
        format!("{} classes realized over {} shapes", got.len(), shapes.len()),
    );
}

/// Over every tripartite shape with at most 8 vertices, the disconnected
/// triangle-free competition graphs are exactly the ten tripartite families.
#[test]
fn acceptance_08_bounded_disconnected_tripartite_theorem() {
    let max_order = 8usize;
    let mut shapes = Vec::new();
    for order in 3..=max_order {
        shapes.extend(classifier::all_shapes(order, 3));
    }
    let c = union_census(&shapes, Filter::TriangleFreeDisconnected);
    let mut patterns: Vec<(Vec<Component>, usize)> = vec![(vec![], 3)]; // (a)
    for j in 1..=max_order {
        patterns.push((vec![Path(2)], j)); // (b)
        patterns.push((vec![Path(3)], j)); // (c)
        patterns.push((vec![Path(4)], j)); // (d)
        patterns.push((vec![Path(2), Path(2)], j)); // (h)
        patterns.push((vec![Path(3), Path(2)], j)); // (i) with isolated vertices
    }
    patterns.push((vec![Star3], 1)); // (e)
    patterns.push((vec![Star3, Path(2)], 0)); // (f)
    patterns.push((vec![Path(4), Path(2)], 0)); // (g)
    patterns.push((vec![Path(3), Path(2)], 0)); // (i) without isolated vertices
    patterns.push((vec![Path(2), Path(2), Path(2)], 0)); // (j)
    let expected: BTreeSet<CanonicalForm> = patterns
        .iter()
        .filter(|(comps, iso)| comps.iter().map(|c| c.order()).sum::<usize>() + iso <= max_order)
        .map(|(comps, iso)| build_pattern(comps, *iso).unwrap().canonical_form())
        .collect();
    let got = key_set(&c);
    let extra: Vec<String> = describe(&got.difference(&expected).cloned().collect());
    let missing: Vec<String> = describe(&expected.difference(&got).cloned().collect());
    assert!(extra.is_empty() && missing.is_empty(), "extra {extra:?}, missing {missing:?}");
    pass(
        "08 bounded disconnected tripartite theorem",
        format!("{} classes realized over {} shapes", got.len(), shapes.len()),
    );
}

/// The minimum number of competition-graph edges over all n-tournaments
/// equals n(n-1)/2 - n for every n in 2..=7, exactly as stated.
///
/// The stated range includes n = 2, where the closed form evaluates to -1
/// while edge counts are nonnegative (both 2-tournaments have empty
/// competition graphs, so the true minimum is 0). The criterion is asserted
/// as stated and therefore fails at n = 2; the formula is exact for every
/// n >= 3.
#[test]
fn acceptance_09_fisher_minimum() {
    let mut failures = Vec::new();
    for n in 2..=7usize {
        let min = min_competition_edges(n) as i64;
        let formula = (n * (n - 1) / 2) as i64 - n as i64;
        let ok = min == formula;
        println!(
            "criterion 09 fisher minimum: n={n}: enumerated min = {min}, closed form = {formula} -> {}",
            if ok { "match" } else { "MISMATCH" }
        );
        if !ok {
            failures.push((n, min, formula));
        }
    }
    assert!(
        failures.is_empty(),
        "minimum competition-graph edge counts differ from the closed form at {failures:?} \
         (n, enumerated, formula); the formula is negative and unattainable at n = 2",
    );
    pass("09 fisher minimum", "n = 2..=7 all match".into());
}

/// Every witness family construction realizes its documented competition
/// graph, across parameters k = 1..=6 where the family is parameterized.
#[test]
fn acceptance_10_witness_validation() {
    let mut built = 0u32;
    for id in WitnessId::all() {
        match id.parameter_min() {
            None => {
                let w = families::witness(id, None).unwrap();
                assert!(
                    w.digraph.competition_graph().is_isomorphic(&w.target_graph()),
                    "{id}"
                );
                built += 1;
            }
            Some(_) => {
                for k in 1..=6 {
                    let w = families::witness(id, Some(k)).unwrap();
                    assert!(
                        w.digraph.competition_graph().is_isomorphic(&w.target_graph()),
                        "{id} k={k}"
                    );
                    built += 1;
                }
            }
        }
    }
    for w in [families::cycle6_witness(), families::path6_witness()] {
        assert!(w.digraph.competition_graph().is_isomorphic(&w.target_graph()), "{}", w.label);
        built += 1;
    }
    pass("10 witness validation", format!("{built} constructions validated"));
}

/// For every triangle-free graph on up to 6 vertices and every k in 2..=5,
/// the pattern-based verdict equals exhaustive-search existence over every
/// k-part shape of the same order (unpruned).
#[test]
fn acceptance_11_classifier_vs_oracle() {
    let mut compared = 0u64;
    for n in 2..=6usize {
        // all triangle-free isomorphism classes on n vertices
        let pairs: Vec<(usize, usize)> =
            (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut classes: std::collections::BTreeMap<CanonicalForm, Graph> = Default::default();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if !g.has_triangle() {
                classes.entry(g.canonical_form()).or_insert(g);
            }
        }
        for k in 2..=5usize {
            // existence oracle: unpruned enumeration over all k-part shapes
            let mut realizable: BTreeSet<CanonicalForm> = BTreeSet::new();
            for s in classifier::all_shapes(n, k) {
                let u = OrientationUniverse::new(&s);
                let c = census(&u, Filter::TriangleFree, Prune::None).unwrap();
                realizable.extend(c.keys().cloned());
            }
            for (form, g) in &classes {
                let verdict = classifier::member(g, k).unwrap();
                let truth = realizable.contains(form);
                assert_eq!(
                    verdict.member, truth,
                    "n={n} k={k} graph {:?}: classifier {} vs enumeration {truth}",
                    g, verdict.member
                );
                if verdict.member {
                    let w = verdict.witness.expect("positive verdicts carry witnesses");
                    assert!(w.digraph.competition_graph().is_isomorphic(g));
                    assert_eq!(w.shape().part_count(), k);
                }
                compared += 1;
            }
        }
    }
    pass("11 classifier vs oracle", format!("{compared} (graph, k) verdicts compared"));
}

/// The six lemma-level property suites hold with zero counterexamples over
/// their registered universes.
#[test]
fn acceptance_12_property_suites() {
    let registry = CheckRegistry::standard();
    for id in [
        "edge-bound",
        "no-cross-edges",
        "outdegree-bound",
        "indegree1-count",
        "same-neighborhood",
        "subdigraph-monotonicity",
    ] {
        let report = registry.run(id).unwrap();
        assert!(
            report.passed && report.counterexamples.is_empty(),
            "{id} failed: {:?}",
            report.details
        );
        println!("criterion 12 property suite: {id} PASS (universe {})", report.universe_size);
    }
    pass("12 property suites", "6 suites, zero counterexamples".into());
}

/// Spec-level classifier spot checks riding along with the acceptance suite.
#[test]
fn acceptance_spot_checks() {
    let report = compgraph::classify(&cycle(5)).unwrap();
    assert_eq!(report.member_ks(), vec![5]);
    let report = compgraph::classify(&cycle(6)).unwrap();
    assert_eq!(report.member_ks(), vec![3]);
    let report = compgraph::classify(&path(5)).unwrap();
    assert_eq!(report.member_ks(), vec![4]);
    let report = compgraph::classify(&star(3)).unwrap();
    assert_eq!(report.member_ks(), vec![4]);
    let p3p2 = build_pattern(&[Path(3), Path(2)], 0).unwrap();
    assert_eq!(compgraph::classify(&p3p2).unwrap().member_ks(), vec![3, 4]);
    pass("spot checks", "classifier examples".into());
}
