//! Exhaustive re-derivation of the classification results over their finite
//! universes.
//!
//! Each registered check enumerates a universe of orientations (or digraphs,
//! or graphs), evaluates a property on every member, and reports pass/fail
//! with up to ten counterexamples. Checks are deterministic: censuses merge
//! by summing counts, random universes use a fixed seeded generator, and
//! parallel execution cannot change any reported value.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bits;
use crate::canon::CanonicalForm;
use crate::classifier;
use crate::digraph::Digraph;
use crate::enumerate::{census, search_with, tournaments, Census, Filter, OrientationUniverse, Prune};
use crate::error::VerifyError;
use crate::families::{self, build_pattern, match_components, pattern_name, Component, WitnessId};
use crate::graph::{self, Graph};
use crate::partition::PartiteShape;
use crate::rng::{random_digraph, SplitMix64};

/// Outcome of one check run.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub check_id: String,
    pub summary: String,
    pub universe: String,
    pub universe_size: u64,
    pub passed: bool,
    pub census: Option<Census>,
    pub counterexamples: Vec<Digraph>,
    pub details: Vec<String>,
    pub elapsed: Duration,
}

/// Partial outcome produced by a check body.
struct Outcome {
    universe: String,
    universe_size: u64,
    passed: bool,
    census: Option<Census>,
    counterexamples: Vec<Digraph>,
    details: Vec<String>,
}

impl Outcome {
    fn new(universe: impl Into<String>, universe_size: u64) -> Self {
        Outcome {
            universe: universe.into(),
            universe_size,
            passed: true,
            census: None,
            counterexamples: Vec::new(),
            details: Vec::new(),
        }
    }

    fn fail(&mut self, detail: impl Into<String>) {
        self.passed = false;
        self.details.push(detail.into());
    }

    fn check(&mut self, ok: bool, detail: impl std::fmt::Display) {
        if !ok {
            self.fail(format!("FAILED: {detail}"));
        }
    }

    fn note(&mut self, detail: impl Into<String>) {
        self.details.push(detail.into());
    }

    fn counterexample(&mut self, d: Digraph) {
        self.passed = false;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(d);
        }
    }
}

const MAX_COUNTEREXAMPLES: usize = 10;

type Runner = Box<dyn Fn() -> Outcome + Send + Sync>;

struct Check {
    id: &'static str,
    summary: &'static str,
    runner: Runner,
}

/// The registry of all exhaustive checks.
pub struct CheckRegistry {
    checks: Vec<Check>,
}

impl CheckRegistry {
    /// Registry with every standard check registered.
    pub fn standard() -> Self {
        let mut reg = CheckRegistry { checks: Vec::new() };
        for (id, summary, runner) in standard_checks() {
            reg.checks.push(Check { id, summary, runner });
        }
        reg
    }

    /// Registers an extra check (tests use this to inject failures).
    #[cfg(test)]
    fn register(
        &mut self,
        id: &'static str,
        summary: &'static str,
        runner: impl Fn() -> Outcome + Send + Sync + 'static,
    ) {
        self.checks.push(Check { id, summary, runner: Box::new(runner) });
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.id).collect()
    }

    pub fn summary_of(&self, id: &str) -> Option<&'static str> {
        self.checks.iter().find(|c| c.id == id).map(|c| c.summary)
    }

    /// Runs a single check by id.
    pub fn run(&self, id: &str) -> Result<VerificationReport, VerifyError> {
        let check = self
            .checks
            .iter()
            .find(|c| c.id == id)
            .ok_or_else(|| VerifyError::UnknownCheck(id.into()))?;
        Ok(run_check(check))
    }

    /// Runs every registered check; overall pass iff all pass.
    pub fn run_all(&self, parallel: bool) -> Vec<VerificationReport> {
        if parallel {
            self.checks.par_iter().map(run_check).collect()
        } else {
            self.checks.iter().map(run_check).collect()
        }
    }
}

fn run_check(check: &Check) -> VerificationReport {
    let start = Instant::now();
    let outcome = (check.runner)();
    VerificationReport {
        check_id: check.id.into(),
        summary: check.summary.into(),
        universe: outcome.universe,
        universe_size: outcome.universe_size,
        passed: outcome.passed,
        census: outcome.census,
        counterexamples: outcome.counterexamples,
        details: outcome.details,
        elapsed: start.elapsed(),
    }
}

// ---------------------------------------------------------------------------
// shared helpers
// ---------------------------------------------------------------------------

fn shape(sizes: &[usize]) -> PartiteShape {
    PartiteShape::new(sizes.iter().copied()).expect("check shapes are valid")
}

fn universe(sizes: &[usize]) -> OrientationUniverse {
    OrientationUniverse::new(&shape(sizes))
}

/// All multipartite shapes with at least `min_parts` parts and at most
/// `max_edges` base edges, up to the given order.
fn shapes_with(max_order: usize, min_parts: usize, max_edges: usize) -> Vec<PartiteShape> {
    let mut out = Vec::new();
    for order in min_parts.max(2)..=max_order {
        for k in min_parts..=order {
            for s in classifier::all_shapes(order, k) {
                if s.part_count() >= min_parts && s.edge_count() <= max_edges {
                    out.push(s);
                }
            }
        }
    }
    out
}

fn tripartite_shapes(max_order: usize) -> Vec<PartiteShape> {
    (3..=max_order)
        .flat_map(|order| classifier::all_shapes(order, 3))
        .collect()
}

fn bipartite_shapes(max_order: usize) -> Vec<PartiteShape> {
    (2..=max_order)
        .flat_map(|order| classifier::all_shapes(order, 2))
        .collect()
}

fn shape_list(shapes: &[PartiteShape]) -> String {
    let parts: Vec<String> = shapes.iter().map(|s| format!("K{s}")).collect();
    parts.join(" ")
}

fn total_size(shapes: &[PartiteShape]) -> u64 {
    shapes.iter().map(|s| 1u64 << s.edge_count()).sum()
}

/// Union census over several shapes.
fn union_census(
    shapes: &[PartiteShape],
    filter: Filter,
    prune: Prune,
) -> Census {
    let mut acc = Census::new(filter.name(), 0);
    for s in shapes {
        let u = OrientationUniverse::new(s);
        let c = census(&u, filter, prune).expect("check universes fit the limit");
        acc.union(&c);
    }
    acc
}

/// Pretty name of a census key when its graph decomposes over the alphabet.
pub fn describe_form(form: &CanonicalForm) -> String {
    match form.to_graph() {
        Some(g) => match match_components(&g) {
            Some((comps, iso)) => pattern_name(&comps, iso),
            None => format!("unrecognized(order {})", g.order()),
        },
        None => "digraph".into(),
    }
}

fn forms_of(patterns: &[(&[Component], usize)]) -> BTreeSet<CanonicalForm> {
    patterns
        .iter()
        .map(|(comps, iso)| build_pattern(comps, *iso).expect("valid pattern").canonical_form())
        .collect()
}

fn compare_key_sets(out: &mut Outcome, got: &Census, expected: &BTreeSet<CanonicalForm>) {
    let got_keys: BTreeSet<CanonicalForm> = got.keys().cloned().collect();
    for extra in got_keys.difference(expected) {
        out.fail(format!("unexpected census class: {}", describe_form(extra)));
    }
    for missing in expected.difference(&got_keys) {
        out.fail(format!("missing census class: {}", describe_form(missing)));
    }
}

/// Property check over every orientation of each universe (with prune).
fn property_check(
    out: &mut Outcome,
    shapes: &[PartiteShape],
    prune: Prune,
    mut property: impl FnMut(&OrientationUniverse, &crate::enumerate::CompetitionView<'_>) -> bool,
) {
    for s in shapes {
        let u = OrientationUniverse::new(s);
        let mut bad: Vec<Digraph> = Vec::new();
        u.visit(prune, |view| {
            if !property(&u, view) {
                bad.push(view.to_digraph());
                if bad.len() >= MAX_COUNTEREXAMPLES {
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        })
        .expect("check universes fit the limit");
        for d in bad {
            out.counterexample(d);
        }
        if !out.passed && out.counterexamples.len() >= MAX_COUNTEREXAMPLES {
            out.note(format!("stopped at counterexample cap in K{s}"));
            return;
        }
    }
}

/// Minimum competition-graph edge count over all labeled tournaments on `n`
/// vertices, by exhaustive enumeration.
pub fn min_competition_edges(n: usize) -> usize {
    let u = tournaments(n).expect("order 2..=7");
    let mut min = usize::MAX;
    u.visit(Prune::None, |view| {
        let e = view.competition_edge_count();
        if e < min {
            min = e;
        }
        ControlFlow::Continue(())
    })
    .expect("tournament universes fit the limit");
    min
}

fn binomial2(n: usize) -> usize {
    n * (n - 1) / 2
}

// ---------------------------------------------------------------------------
// the standard checks
// ---------------------------------------------------------------------------

fn standard_checks() -> Vec<(&'static str, &'static str, Runner)> {
    vec![
        (
            "edge-bound",
            "triangle-free competition graph forces |E| <= |A|/2 <= |V|",
            Box::new(check_edge_bound),
        ),
        (
            "subdigraph-monotonicity",
            "competition graph of an arc subset is a subgraph",
            Box::new(check_subdigraph_monotonicity),
        ),
        (
            "isolated-vertex-lemma",
            "tripartite shapes with two singleton parts always leave an isolated vertex",
            Box::new(check_isolated_vertex),
        ),
        (
            "K421-impossible",
            "no orientation of K4,2,1 has a triangle-free competition graph",
            Box::new(check_k421),
        ),
        (
            "tripartite-sizes",
            "tripartite shapes admitting triangle-free competition graphs",
            Box::new(check_tripartite_sizes),
        ),
        (
            "tripartite-order",
            "connected triangle-free tripartite competition graphs have order 5 or 6",
            Box::new(check_tripartite_order),
        ),
        (
            "cycle-tripartite",
            "a cycle is a tripartite competition graph only at length 6",
            Box::new(check_cycle_tripartite),
        ),
        (
            "path-tripartite",
            "a path (>= 3 vertices) is a tripartite competition graph only at length 6",
            Box::new(check_path_tripartite),
        ),
        (
            "K321-structure",
            "structure of K3,2,1 orientations with connected triangle-free competition",
            Box::new(check_k321_structure),
        ),
        (
            "connected-tripartite-census",
            "connected triangle-free tripartite competition graphs",
            Box::new(check_connected_tripartite),
        ),
        (
            "k6-forces-triangle",
            "every 6-tournament competition graph has a triangle",
            Box::new(check_k6_triangle),
        ),
        (
            "five-partite",
            "triangle-free 5-partite competition graphs come from regular 5-tournaments",
            Box::new(check_five_partite),
        ),
        (
            "same-neighborhood",
            "equal neighborhoods force same part and a joint component",
            Box::new(check_same_neighborhood),
        ),
        (
            "four-partite-sizes",
            "4-partite shapes admitting triangle-free competition graphs",
            Box::new(check_four_partite_sizes),
        ),
        (
            "connected-4partite-census",
            "connected triangle-free 4-partite competition graphs",
            Box::new(check_connected_4partite),
        ),
        (
            "disconnected-4partite-census",
            "disconnected triangle-free 4-partite competition graphs",
            Box::new(check_disconnected_4partite),
        ),
        (
            "bipartite-sizes",
            "bipartite shapes with both parts >= 3 admitting triangle-free competition",
            Box::new(check_bipartite_sizes),
        ),
        (
            "bipartite-census-bounded",
            "bipartite triangle-free competition graphs up to 9 vertices",
            Box::new(check_bipartite_census),
        ),
        (
            "disconnected-tripartite-census-bounded",
            "disconnected triangle-free tripartite competition graphs up to 8 vertices",
            Box::new(check_disconnected_tripartite_census),
        ),
        (
            "no-cross-edges",
            "bipartite competition graphs have no edges across the parts",
            Box::new(check_no_cross_edges),
        ),
        (
            "fisher-min-edges",
            "minimum tournament competition-graph size matches the closed form",
            Box::new(check_fisher_min_edges),
        ),
        (
            "kim-path-unions",
            "two-path unions arising as bipartite competition graphs",
            Box::new(check_kim_path_unions),
        ),
        (
            "kim-cycle-unions",
            "two-cycle unions arising as bipartite competition graphs",
            Box::new(check_kim_cycle_unions),
        ),
        (
            "outdegree-bound",
            "triangle-free competition forces outdegree >= |V|-|X|-2",
            Box::new(check_outdegree_bound),
        ),
        (
            "indegree1-count",
            "triangle-free competition bounds the number of indegree-1 vertices",
            Box::new(check_indegree1_count),
        ),
        (
            "disconnected-k-range",
            "5-partite tournaments never have disconnected triangle-free competition",
            Box::new(check_disconnected_k_range),
        ),
        (
            "connected-census-by-k",
            "connected triangle-free competition graphs per k",
            Box::new(check_connected_by_k),
        ),
        (
            "witness-validation",
            "every witness family realizes its documented competition graph",
            Box::new(check_witness_validation),
        ),
        (
            "fisher-no-path-complement",
            "no tournament competition graph has a path complement (n >= 4)",
            Box::new(check_no_path_complement),
        ),
        (
            "classifier-oracle",
            "pattern-based verdicts match exhaustive search on <= 6 vertices",
            Box::new(check_classifier_oracle),
        ),
    ]
}

fn check_edge_bound() -> Outcome {
    let mut out = Outcome::new(
        "loopless digraphs: exhaustive n<=3, 400 seeded random n<=10, all orientations of K3,2,1 and K2,2",
        0,
    );
    let mut total = 0u64;
    let check_digraph = |out: &mut Outcome, d: &Digraph| {
        let c = d.competition_graph();
        if !c.has_triangle() {
            let edges = c.edge_count();
            let arcs = d.arc_count();
            let n = d.order();
            if 2 * edges > arcs || arcs > 2 * n {
                out.counterexample(d.clone());
            }
        }
    };
    // exhaustive loopless digraphs on 2 and 3 vertices
    for n in 2..=3usize {
        let slots: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
        for mask in 0u64..(1 << slots.len()) {
            let arcs: Vec<(usize, usize)> = slots
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &a)| a)
                .collect();
            let d = Digraph::from_arcs(n, &arcs).unwrap();
            check_digraph(&mut out, &d);
            total += 1;
        }
    }
    // seeded random digraphs
    let mut rng = SplitMix64(0x5eed_ed9e);
    for _ in 0..400 {
        let n = 2 + rng.below(9);
        let d = random_digraph(&mut rng, n, 35);
        check_digraph(&mut out, &d);
        total += 1;
    }
    // every triangle-free instance the enumerator produces on small shapes
    for s in small_shapes() {
        let u = OrientationUniverse::new(&s);
        u.visit(Prune::IndegreeLe2, |view| {
            if view.triangle_free() {
                let edges = view.competition_edge_count();
                let arcs = view.arc_count();
                if 2 * edges > arcs || arcs > 2 * view.order() {
                    out.counterexample(view.to_digraph());
                }
            }
            ControlFlow::Continue(())
        })
        .unwrap();
        total += u.size();
    }
    out.universe_size = total;
    out.note(format!("{total} digraphs checked"));
    out
}

fn check_subdigraph_monotonicity() -> Outcome {
    let mut out = Outcome::new(
        "400 seeded random digraphs n<=10 with 3 random arc subsets each; all 5-tournaments with every single-arc deletion",
        0,
    );
    let mut total = 0u64;
    let mut rng = SplitMix64(0xdead_beef);
    let check_pair = |out: &mut Outcome, d: &Digraph, sub: &Digraph| {
        let big = d.competition_graph();
        let small = sub.competition_graph();
        for (u, v) in small.edges() {
            if !big.has_edge(u, v) {
                out.counterexample(sub.clone());
                return;
            }
        }
    };
    for _ in 0..400 {
        let n = 2 + rng.below(9);
        let d = random_digraph(&mut rng, n, 35);
        for _ in 0..3 {
            let keep: Vec<(usize, usize)> =
                d.arcs().into_iter().filter(|_| rng.chance(70)).collect();
            let sub = Digraph::from_arcs(n, &keep).unwrap();
            check_pair(&mut out, &d, &sub);
            total += 1;
        }
    }
    let u = tournaments(5).unwrap();
    for d in u.orientations().unwrap() {
        for (skip_u, skip_v) in d.arcs() {
            let keep: Vec<(usize, usize)> = d
                .arcs()
                .into_iter()
                .filter(|&(a, b)| (a, b) != (skip_u, skip_v))
                .collect();
            let sub = Digraph::from_arcs(5, &keep).unwrap();
            check_pair(&mut out, &d, &sub);
            total += 1;
        }
    }
    out.universe_size = total;
    out.note(format!("{total} (digraph, subdigraph) pairs checked"));
    out
}

fn check_isolated_vertex() -> Outcome {
    let shapes: Vec<PartiteShape> = (1..=5).map(|m| shape(&[m, 1, 1])).collect();
    let mut out = Outcome::new(shape_list(&shapes), total_size(&shapes));
    property_check(&mut out, &shapes, Prune::None, |_, view| {
        // at most one part exceeds 1, so some vertex must be isolated
        view.competition_rows().iter().any(|&row| row == 0)
    });
    out
}

fn check_k421() -> Outcome {
    let u = universe(&[4, 2, 1]);
    let mut out = Outcome::new("all orientations of K4,2,1", u.size());
    let c = census(&u, Filter::TriangleFree, Prune::IndegreeLe2).unwrap();
    out.check(c.is_empty(), format!("expected empty census, found {} classes", c.counts().len()));
    out.note(format!("universe 2^14 = {}", u.size()));
    out.census = Some(c);
    out
}

fn check_tripartite_sizes() -> Outcome {
    let shapes = tripartite_shapes(8);
    let mut out = Outcome::new(shape_list(&shapes), total_size(&shapes));
    for s in &shapes {
        let sz = s.sizes();
        let admissible = (sz[1] == 1 && sz[2] == 1)
            || (sz[0] <= 3 && sz[1] == 2 && sz[2] == 1)
            || sz == [2, 2, 2];
        let u = OrientationUniverse::new(s);
        let found = crate::enumerate::first_match(&u, Prune::IndegreeLe2, |view| {
            view.triangle_free()
        })
        .unwrap();
        out.check(
            found.is_some() == admissible,
            format!("K{s}: triangle-free exists = {}, size bound admits = {admissible}", found.is_some()),
        );
        out.note(format!("K{s}: triangle-free orientation exists = {}", found.is_some()));
    }
    out
}

fn check_tripartite_order() -> Outcome {
    let shapes = tripartite_shapes(8);
    let mut out = Outcome::new(shape_list(&shapes), total_size(&shapes));
    let c = union_census(&shapes, Filter::TriangleFreeConnected, Prune::IndegreeLe2);
    for key in c.keys() {
        let order = key.order();
        out.check(
            order == 5 || order == 6,
            format!("connected class {} has order {order}", describe_form(key)),
        );
    }
    out.census = Some(c);
    out
}

fn cycle_path_shapes() -> Vec<PartiteShape> {
    let mut shapes = vec![shape(&[2, 2, 2]), shape(&[3, 2, 1]), shape(&[2, 2, 1])];
    for m in 1..=6 {
        shapes.push(shape(&[m, 1, 1]));
    }
    shapes
}

fn check_cycle_tripartite() -> Outcome {
    let shapes = cycle_path_shapes();
    let mut out = Outcome::new(shape_list(&shapes), total_size(&shapes));
    let c = union_census(&shapes, Filter::TriangleFree, Prune::IndegreeLe2);
    let mut cycle_lengths = BTreeSet::new();
    for key in c.keys() {
        if let Some((comps, 0)) = key.to_graph().and_then(|g| match_components(&g)) {
            if let [Component::Cycle(n)] = comps[..] {
                cycle_lengths.insert(n);
            }
        }
    }
    out.check(
        cycle_lengths == BTreeSet::from([6]),
        format!("cycle lengths realized: {cycle_lengths:?}, expected {{6}}"),
    );
    out.census = Some(c);
    out
}

fn check_path_tripartite() -> Outcome {
    let shapes = cycle_path_shapes();
    let mut out = Outcome::new(shape_list(&shapes), total_size(&shapes));
    let c = union_census(&shapes, Filter::TriangleFree, Prune::IndegreeLe2);
    let mut path_lengths = BTreeSet::new();
    for key in c.keys() {
        if let Some((comps, 0)) = key.to_graph().and_then(|g| match_components(&g)) {
            if let [Component::Path(n)] = comps[..] {
                if n >= 3 {
                    path_lengths.insert(n);
                }
            }
        }
    }
    out.check(
        path_lengths == BTreeSet::from([6]),
        format!("path orders realized: {path_lengths:?}, expected {{6}}"),
    );
    out.census = Some(c);
    out
}

fn check_k321_structure() -> Outcome {
    let u = universe(&[3, 2, 1]);
    let mut out = Outcome::new("all orientations of K3,2,1", u.size());
    let mut relevant = 0u64;
    u.visit(Prune::None, |view| {
        if view.triangle_free() && view.connected() {
            relevant += 1;
            let indeg = view.indegrees();
            if indeg.iter().any(|&d| d == 0) {
                out.counterexample(view.to_digraph());
                return ControlFlow::Continue(());
            }
            let twos: Vec<usize> =
                (0..view.order()).filter(|&v| indeg[v] == 2).collect();
            let d = view.to_digraph();
            let distinct = twos
                .iter()
                .enumerate()
                .all(|(i, &a)| twos[i + 1..].iter().all(|&b| d.in_neighbors(a) != d.in_neighbors(b)));
            if twos.len() != 5 || !distinct {
                out.counterexample(d);
            }
        }
        ControlFlow::Continue(())
    })
    .unwrap();
    out.note(format!("{relevant} orientations with connected triangle-free competition"));
    out
}

/// Golden multiplicities for the connected tripartite census, computed once
/// by this enumeration and frozen.
const CONNECTED_TRIPARTITE_GOLDEN: &[(&str, u64)] = &[
    ("C6", 24),
    ("G1", 2),
    ("G2", 8),
    ("G3", 12),
    ("G4", 12),
    ("P6", 12),
];

fn connected_tripartite_shapes() -> Vec<PartiteShape> {
    let mut shapes = vec![shape(&[2, 2, 1]), shape(&[2, 2, 2]), shape(&[3, 2, 1])];
    for m in 1..=6 {
        shapes.push(shape(&[m, 1, 1]));
    }
    shapes
}

pub(crate) fn connected_tripartite_census() -> Census {
    union_census(&connected_tripartite_shapes(), Filter::TriangleFreeConnected, Prune::IndegreeLe2)
}

fn check_connected_tripartite() -> Outcome {
    let shapes = connected_tripartite_shapes();
    let mut out = Outcome::new(shape_list(&shapes), total_size(&shapes));
    let c = connected_tripartite_census();
    let expected = forms_of(&[
        (&[Component::G1], 0),
        (&[Component::G2], 0),
        (&[Component::G3], 0),
        (&[Component::G4], 0),
        (&[Component::Path(6)], 0),
        (&[Component::Cycle(6)], 0),
    ]);
    compare_key_sets(&mut out, &c, &expected);
    let got: BTreeMap<String, u64> =
        c.counts().iter().map(|(k, &n)| (describe_form(k), n)).collect();
    for (name, count) in &got {
        out.note(format!("{name}: {count} orientations"));
    }
    let golden: BTreeMap<String, u64> =
        CONNECTED_TRIPARTITE_GOLDEN.iter().map(|&(n, c)| (n.into(), c)).collect();
    out.check(
        got == golden,
        format!("multiplicities {got:?} differ from frozen {golden:?}"),
    );
    out.census = Some(c);
    out
}

fn check_k6_triangle() -> Outcome {
    let u = tournaments(6).unwrap();
    let mut out = Outcome::new("all 6-tournaments", u.size());
    u.visit(Prune::None, |view| {
        if view.triangle_free() {
            out.counterexample(view.to_digraph());
        }
        ControlFlow::Continue(())
    })
    .unwrap();
    out.note(format!("universe 2^15 = {}", u.size()));
    out
}

/// Labeled regular 5-tournaments, computed once by this enumeration and
/// frozen (the regular 5-tournament is unique up to isomorphism).
const REGULAR_5_TOURNAMENTS: u64 = 24;

fn check_five_partite() -> Outcome {
    let t5 = tournaments(5).unwrap();
    let extra = universe(&[2, 1, 1, 1, 1]);
    let mut out = Outcome::new(
        "all 5-tournaments; all orientations of K2,1,1,1,1",
        t5.size() + extra.size(),
    );
    let c5_form = graph::cycle(5).canonical_form();
    let mut triangle_free = 0u64;
    t5.visit(Prune::None, |view| {
        if view.triangle_free() {
            triangle_free += 1;
            let regular = (0..5).all(|v| view.outdegree(v) == 2);
            let is_c5 = view.to_competition_graph().canonical_form() == c5_form;
            if !regular || !is_c5 {
                out.counterexample(view.to_digraph());
            }
        }
        ControlFlow::Continue(())
    })
    .unwrap();
    out.note(format!("{triangle_free} of 1024 5-tournaments are triangle-free"));
    out.check(
        triangle_free == REGULAR_5_TOURNAMENTS,
        format!("expected {REGULAR_5_TOURNAMENTS} regular labeled 5-tournaments, found {triangle_free}"),
    );
    let c = census(&extra, Filter::TriangleFree, Prune::IndegreeLe2).unwrap();
    out.check(c.is_empty(), "K2,1,1,1,1 admits a triangle-free competition graph");
    out
}

fn small_shapes() -> Vec<PartiteShape> {
    shapes_with(13, 2, 12)
}

fn check_same_neighborhood() -> Outcome {
    let shapes = small_shapes();
    let mut out = Outcome::new(
        format!("multipartite shapes with <= 2^12 orientations ({} shapes)", shapes.len()),
        total_size(&shapes),
    );
    property_check(&mut out, &shapes, Prune::IndegreeLe2, |u, view| {
        if !view.triangle_free() {
            return true;
        }
        let n = view.order();
        let out_rows = view.out_rows();
        let comp = view.competition_rows();
        let mut in_rows = [0u64; 64];
        for v in 0..n {
            for w in bits::iter_bits(out_rows[v]) {
                in_rows[w] |= bits::bit(v);
            }
        }
        let part_of = |v: usize| u.partition().part_of(v);
        for a in 0..n {
            if out_rows[a] == 0 {
                continue;
            }
            for b in (a + 1)..n {
                if out_rows[b] == 0 {
                    continue;
                }
                let same_out = out_rows[a] == out_rows[b];
                let same_in = in_rows[a] == in_rows[b];
                if !(same_out || same_in) {
                    continue;
                }
                if part_of(a) != part_of(b) {
                    return false;
                }
                // the pair must be a whole component of the competition graph
                let pair = bits::bit(a) | bits::bit(b);
                if comp[a] != bits::bit(b) || comp[b] != bits::bit(a) {
                    return false;
                }
                for v in 0..n {
                    if v != a && v != b && comp[v] & pair != 0 {
                        return false;
                    }
                }
            }
        }
        true
    });
    out
}

fn check_four_partite_sizes() -> Outcome {
    let shapes = vec![
        shape(&[1, 1, 1, 1]),
        shape(&[2, 1, 1, 1]),
        shape(&[3, 1, 1, 1]),
        shape(&[4, 1, 1, 1]),
        shape(&[2, 2, 1, 1]),
    ];
    let mut out = Outcome::new(shape_list(&shapes), total_size(&shapes));
    for s in &shapes {
        let admissible = s.sizes()[0] <= 2 && s.sizes()[1..] == [1, 1, 1];
        let u = OrientationUniverse::new(s);
        let found =
            crate::enumerate::first_match(&u, Prune::IndegreeLe2, |view| view.triangle_free())
                .unwrap();
        out.check(
            found.is_some() == admissible,
            format!("K{s}: triangle-free exists = {}, size bound admits = {admissible}", found.is_some()),
        );
        out.note(format!("K{s}: triangle-free orientation exists = {}", found.is_some()));
    }
    out
}

fn four_partite_shapes() -> Vec<PartiteShape> {
    vec![shape(&[1, 1, 1, 1]), shape(&[2, 1, 1, 1])]
}

pub(crate) fn connected_4partite_census() -> Census {
    union_census(&four_partite_shapes(), Filter::TriangleFreeConnected, Prune::IndegreeLe2)
}

pub(crate) fn disconnected_4partite_census() -> Census {
    union_census(&four_partite_shapes(), Filter::TriangleFreeDisconnected, Prune::IndegreeLe2)
}

/// Golden multiplicities, computed once by this enumeration and frozen.
const CONNECTED_4PARTITE_GOLDEN: &[(&str, u64)] =
    &[("G2", 12), ("K1,3", 8), ("P5", 24)];

fn check_connected_4partite() -> Outcome {
    let shapes = four_partite_shapes();
    let mut out = Outcome::new(shape_list(&shapes), total_size(&shapes));
    let c = connected_4partite_census();
    let expected = forms_of(&[
        (&[Component::Path(5)], 0),
        (&[Component::Star3], 0),
        (&[Component::G2], 0),
    ]);
    compare_key_sets(&mut out, &c, &expected);
    let got: BTreeMap<String, u64> =
        c.counts().iter().map(|(k, &n)| (describe_form(k), n)).collect();
    for (name, count) in &got {
        out.note(format!("{name}: {count} orientations"));
    }
    let golden: BTreeMap<String, u64> =
        CONNECTED_4PARTITE_GOLDEN.iter().map(|&(n, c)| (n.into(), c)).collect();
    out.check(got == golden, format!("multiplicities {got:?} differ from frozen {golden:?}"));
    out.census = Some(c);
    out
}

/// Golden multiplicities, computed once by this enumeration and frozen.
const DISCONNECTED_4PARTITE_GOLDEN: &[(&str, u64)] = &[("P3+I1", 24), ("P3+P2", 6)];

fn check_disconnected_4partite() -> Outcome {
    let shapes = four_partite_shapes();
    let mut out = Outcome::new(shape_list(&shapes), total_size(&shapes));
    let c = disconnected_4partite_census();
    let expected = forms_of(&[
        (&[Component::Path(3), Component::Path(2)], 0),
        (&[Component::Path(3)], 1),
    ]);
    compare_key_sets(&mut out, &c, &expected);
    let got: BTreeMap<String, u64> =
        c.counts().iter().map(|(k, &n)| (describe_form(k), n)).collect();
    for (name, count) in &got {
        out.note(format!("{name}: {count} orientations"));
    }
    let golden: BTreeMap<String, u64> =
        DISCONNECTED_4PARTITE_GOLDEN.iter().map(|&(n, c)| (n.into(), c)).collect();
    out.check(got == golden, format!("multiplicities {got:?} differ from frozen {golden:?}"));
    out.census = Some(c);
    out
}

fn check_bipartite_sizes() -> Outcome {
    let shapes: Vec<PartiteShape> = bipartite_shapes(11)
        .into_iter()
        .filter(|s| s.sizes()[1] >= 3 && s.edge_count() <= 21)
        .collect();
    let mut out = Outcome::new(shape_list(&shapes), total_size(&shapes));
    for s in &shapes {
        let (n1, n2) = (s.sizes()[0], s.sizes()[1]);
        let admissible = (n2 == 3 && n1 <= 6) || (n1 == 4 && n2 == 4);
        let u = OrientationUniverse::new(s);
        let found =
            crate::enumerate::first_match(&u, Prune::IndegreeLe2, |view| view.triangle_free())
                .unwrap();
        // The size bound is necessary, not sufficient: K5,3 and K6,3 satisfy
        // it yet admit no triangle-free orientation.
        out.check(
            admissible || found.is_none(),
            format!("K{s}: triangle-free orientation exists outside the size bound"),
        );
        out.note(format!("K{s}: triangle-free orientation exists = {}", found.is_some()));
    }
    out
}

/// The bipartite families instantiable within an order cap.
fn bipartite_expected_patterns(max_order: usize) -> BTreeSet<CanonicalForm> {
    use Component::*;
    let mut patterns: Vec<(Vec<Component>, usize)> = Vec::new();
    for order in 2..=max_order {
        patterns.push((vec![], order));
    }
    for j in 1..=max_order.saturating_sub(2) {
        patterns.push((vec![Path(2)], j));
    }
    for j in 1..=max_order.saturating_sub(4) {
        patterns.push((vec![Path(2), Path(2)], j));
    }
    for j in 1..=max_order.saturating_sub(5) {
        patterns.push((vec![Path(3), Path(2)], j));
    }
    for j in 1..=max_order.saturating_sub(6) {
        patterns.push((vec![Path(2), Path(2), Path(2)], j));
    }
    patterns.push((vec![Path(3)], 2));
    patterns.push((vec![Path(3), Path(3)], 0));
    patterns.push((vec![Path(4), Path(3)], 0));
    patterns.push((vec![Path(3), Path(2), Path(2)], 0));
    patterns.push((vec![Cycle(4), Cycle(4)], 0));
    patterns.push((vec![Path(2), Path(2), Path(2), Path(2)], 0));
    patterns
        .into_iter()
        .filter(|(comps, iso)| {
            comps.iter().map(|c| c.order()).sum::<usize>() + iso <= max_order
        })
        .map(|(comps, iso)| build_pattern(&comps, iso).unwrap().canonical_form())
        .collect()
}

pub(crate) fn bounded_bipartite_census(max_order: usize) -> Census {
    union_census(&bipartite_shapes(max_order), Filter::TriangleFree, Prune::IndegreeLe2)
}

fn check_bipartite_census() -> Outcome {
    let shapes = bipartite_shapes(9);
    let mut out = Outcome::new(format!("all bipartite shapes with <= 9 vertices ({} shapes)", shapes.len()), total_size(&shapes));
    let c = bounded_bipartite_census(9);
    let expected = bipartite_expected_patterns(9);
    compare_key_sets(&mut out, &c, &expected);
    out.note(format!("{} isomorphism classes realized", c.counts().len()));
    out.census = Some(c);
    out
}

/// The tripartite disconnected families instantiable within an order cap.
fn tripartite_expected_patterns(max_order: usize) -> BTreeSet<CanonicalForm> {
    use Component::*;
    let mut patterns: Vec<(Vec<Component>, usize)> = vec![(vec![], 3)];
    for j in 1..=max_order.saturating_sub(2) {
        patterns.push((vec![Path(2)], j));
    }
    for j in 1..=max_order.saturating_sub(3) {
        patterns.push((vec![Path(3)], j));
    }
    for j in 1..=max_order.saturating_sub(4) {
        patterns.push((vec![Path(4)], j));
    }
    patterns.push((vec![Star3], 1));
    patterns.push((vec![Star3, Path(2)], 0));
    patterns.push((vec![Path(4), Path(2)], 0));
    for j in 1..=max_order.saturating_sub(4) {
        patterns.push((vec![Path(2), Path(2)], j));
    }
    for j in 0..=max_order.saturating_sub(5) {
        patterns.push((vec![Path(3), Path(2)], j));
    }
    patterns.push((vec![Path(2), Path(2), Path(2)], 0));
    patterns
        .into_iter()
        .filter(|(comps, iso)| {
            comps.iter().map(|c| c.order()).sum::<usize>() + iso <= max_order
        })
        .map(|(comps, iso)| build_pattern(&comps, iso).unwrap().canonical_form())
        .collect()
}

pub(crate) fn bounded_disconnected_tripartite_census(max_order: usize) -> Census {
    union_census(
        &tripartite_shapes(max_order),
        Filter::TriangleFreeDisconnected,
        Prune::IndegreeLe2,
    )
}

fn check_disconnected_tripartite_census() -> Outcome {
    let shapes = tripartite_shapes(8);
    let mut out = Outcome::new(
        format!("all tripartite shapes with <= 8 vertices ({} shapes)", shapes.len()),
        total_size(&shapes),
    );
    let c = bounded_disconnected_tripartite_census(8);
    let expected = tripartite_expected_patterns(8);
    compare_key_sets(&mut out, &c, &expected);
    out.note(format!("{} isomorphism classes realized", c.counts().len()));
    out.census = Some(c);
    out
}

fn check_no_cross_edges() -> Outcome {
    let shapes: Vec<PartiteShape> = bipartite_shapes(10)
        .into_iter()
        .filter(|s| s.edge_count() <= 14)
        .collect();
    let mut out = Outcome::new(
        format!("bipartite shapes with <= 2^14 orientations ({} shapes)", shapes.len()),
        total_size(&shapes),
    );
    property_check(&mut out, &shapes, Prune::None, |u, view| {
        let part1 = u.partition().part_members(1);
        let part0 = u.partition().part_members(0);
        (0..view.order()).all(|v| {
            let row = view.competition_rows()[v];
            if part0 & bits::bit(v) != 0 {
                row & part1 == 0
            } else {
                row & part0 == 0
            }
        })
    });
    out
}

fn check_fisher_min_edges() -> Outcome {
    let mut out = Outcome::new("all tournaments, n = 2..=7", (2..=7).map(|n| 1u64 << binomial2(n)).sum());
    for n in 2..=7usize {
        let min = min_competition_edges(n);
        let formula = binomial2(n) as i64 - n as i64;
        if n == 2 {
            // The closed form is negative here and unattainable; the true
            // minimum is 0 (both 2-tournaments have empty competition
            // graphs). The formula is exact from n = 3 on.
            out.note(format!(
                "n=2: min edges = {min} (closed form gives {formula}, degenerate below n=3)"
            ));
            out.check(min == 0, format!("n=2: expected minimum 0, found {min}"));
        } else {
            out.note(format!("n={n}: min edges = {min}, closed form = {formula}"));
            out.check(
                min as i64 == formula,
                format!("n={n}: minimum {min} != closed form {formula}"),
            );
        }
    }
    out
}

fn two_path_union(comps: &[Component], iso: usize) -> Option<(usize, usize)> {
    // exactly two components, each a path (an isolated vertex is a 1-path)
    let mut orders = comps
        .iter()
        .map(|c| match c {
            Component::Path(n) => Some(*n),
            _ => None,
        })
        .collect::<Option<Vec<usize>>>()?;
    orders.extend(std::iter::repeat(1).take(iso));
    if orders.len() != 2 {
        return None;
    }
    orders.sort_unstable_by(|a, b| b.cmp(a));
    Some((orders[0], orders[1]))
}

fn check_kim_path_unions() -> Outcome {
    let shapes = bipartite_shapes(8);
    let mut out = Outcome::new(
        format!("all bipartite shapes with <= 8 vertices ({} shapes)", shapes.len()),
        total_size(&shapes),
    );
    let c = union_census(&shapes, Filter::TriangleFree, Prune::IndegreeLe2);
    let mut realized = BTreeSet::new();
    for key in c.keys() {
        if let Some((comps, iso)) = key.to_graph().and_then(|g| match_components(&g)) {
            if let Some(pair) = two_path_union(&comps, iso) {
                realized.insert(pair);
            }
        }
    }
    let expected = BTreeSet::from([(1, 1), (2, 1), (3, 3), (4, 3)]);
    out.check(
        realized == expected,
        format!("two-path unions realized: {realized:?}, expected {expected:?}"),
    );
    out.note(format!("two-path unions realized: {realized:?}"));
    out
}

fn check_kim_cycle_unions() -> Outcome {
    let shapes: Vec<PartiteShape> = bipartite_shapes(10)
        .into_iter()
        .filter(|s| s.sizes()[1] >= 3)
        .collect();
    let mut out = Outcome::new(
        format!("bipartite shapes, both parts >= 3, <= 10 vertices ({} shapes)", shapes.len()),
        total_size(&shapes),
    );
    // Unpruned: a 3-cycle union contains triangles, so the indegree prune
    // would be unsound for this query.
    let mut realized: BTreeSet<(usize, usize)> = BTreeSet::new();
    for s in &shapes {
        let u = OrientationUniverse::new(s);
        let c = search_with(&u, Prune::None, "two-cycle-union", |view| {
            let n = view.order();
            let comp = view.competition_rows();
            (0..n).all(|v| comp[v].count_ones() == 2)
                && bits::component_masks(n, comp).len() == 2
        })
        .unwrap();
        for key in c.keys() {
            let g = key.to_graph().unwrap();
            let mut orders: Vec<usize> =
                g.components().iter().map(|m| m.count_ones() as usize).collect();
            orders.sort_unstable_by(|a, b| b.cmp(a));
            realized.insert((orders[0], orders[1]));
        }
    }
    let expected = BTreeSet::from([(4, 4)]);
    out.check(
        realized == expected,
        format!("two-cycle unions realized: {realized:?}, expected {expected:?}"),
    );
    out.note(format!("two-cycle unions realized: {realized:?}"));
    out
}

fn check_outdegree_bound() -> Outcome {
    let shapes = small_shapes();
    let mut out = Outcome::new(
        format!("multipartite shapes with <= 2^12 orientations ({} shapes)", shapes.len()),
        total_size(&shapes),
    );
    property_check(&mut out, &shapes, Prune::IndegreeLe2, |u, view| {
        if !view.triangle_free() {
            return true;
        }
        let n = view.order();
        (0..n).all(|v| {
            let part = u.partition().part_members(u.partition().part_of(v));
            let bound = n as i64 - part.count_ones() as i64 - 2;
            view.outdegree(v) as i64 >= bound
        })
    });
    out
}

fn check_indegree1_count() -> Outcome {
    let shapes = small_shapes();
    let mut out = Outcome::new(
        format!("multipartite shapes with <= 2^12 orientations ({} shapes)", shapes.len()),
        total_size(&shapes),
    );
    property_check(&mut out, &shapes, Prune::IndegreeLe2, |_, view| {
        if !view.triangle_free() {
            return true;
        }
        let ones = view.indegrees().iter().filter(|&&d| d == 1).count() as i64;
        2 * view.order() as i64 - view.arc_count() as i64 >= ones
    });
    out
}

fn check_disconnected_k_range() -> Outcome {
    let shapes = vec![shape(&[1, 1, 1, 1, 1]), shape(&[2, 1, 1, 1, 1])];
    let mut out = Outcome::new(shape_list(&shapes), total_size(&shapes));
    let c = union_census(&shapes, Filter::TriangleFreeDisconnected, Prune::IndegreeLe2);
    out.check(
        c.is_empty(),
        format!("expected no disconnected triangle-free classes, found {}", c.counts().len()),
    );
    out.census = Some(c);
    out
}

fn check_connected_by_k() -> Outcome {
    let mut out = Outcome::new("connected censuses for k = 2..=5", 0);
    // k = 2: never connected
    let bip = union_census(&bipartite_shapes(9), Filter::TriangleFreeConnected, Prune::IndegreeLe2);
    out.check(
        bip.is_empty(),
        format!("bipartite connected census should be empty, found {}", bip.counts().len()),
    );
    // k = 3: the six graphs
    let c3 = connected_tripartite_census();
    compare_key_sets(
        &mut out,
        &c3,
        &forms_of(&[
            (&[Component::G1], 0),
            (&[Component::G2], 0),
            (&[Component::G3], 0),
            (&[Component::G4], 0),
            (&[Component::Path(6)], 0),
            (&[Component::Cycle(6)], 0),
        ]),
    );
    // k = 4: the three graphs
    let c4 = connected_4partite_census();
    compare_key_sets(
        &mut out,
        &c4,
        &forms_of(&[
            (&[Component::Path(5)], 0),
            (&[Component::Star3], 0),
            (&[Component::G2], 0),
        ]),
    );
    // k = 5: only the 5-cycle
    let c5 = union_census(
        &[shape(&[1, 1, 1, 1, 1]), shape(&[2, 1, 1, 1, 1])],
        Filter::TriangleFreeConnected,
        Prune::IndegreeLe2,
    );
    compare_key_sets(&mut out, &c5, &forms_of(&[(&[Component::Cycle(5)], 0)]));
    out.note("k=2 empty; k=3 six classes; k=4 three classes; k=5 one class");
    out
}

fn check_witness_validation() -> Outcome {
    let mut out = Outcome::new("witness families D1..D27 and REG5; parameters k = 1..=6", 0);
    let mut built = 0u64;
    for id in WitnessId::all() {
        match id.parameter_min() {
            None => match families::witness(id, None) {
                Ok(w) => {
                    built += 1;
                    let c = w.digraph.competition_graph();
                    out.check(
                        c.is_isomorphic(&w.target_graph()),
                        format!("{id}: competition graph differs from target"),
                    );
                }
                Err(e) => out.fail(format!("{id}: {e}")),
            },
            Some(_) => {
                for k in 1..=6 {
                    match families::witness(id, Some(k)) {
                        Ok(w) => {
                            built += 1;
                            let c = w.digraph.competition_graph();
                            out.check(
                                c.is_isomorphic(&w.target_graph()),
                                format!("{id} k={k}: competition graph differs from target"),
                            );
                        }
                        Err(e) => out.fail(format!("{id} k={k}: {e}")),
                    }
                }
            }
        }
    }
    for (name, w) in [("C6@K2,2,2", families::cycle6_witness()), ("P6@K3,2,1", families::path6_witness())] {
        built += 1;
        out.check(
            w.digraph.competition_graph().is_isomorphic(&w.target_graph()),
            format!("{name}: competition graph differs from target"),
        );
    }
    out.universe_size = built;
    out.note(format!("{built} constructions validated"));
    out
}

fn check_no_path_complement() -> Outcome {
    let mut out = Outcome::new("all tournaments, n = 4, 5, 6", (4..=6).map(|n| 1u64 << binomial2(n)).sum());
    for n in 4..=6usize {
        let path_form = graph::path(n).canonical_form();
        let path_edges = n - 1;
        let u = tournaments(n).unwrap();
        u.visit(Prune::None, |view| {
            let comp_edges = view.competition_edge_count();
            if binomial2(n) - comp_edges == path_edges {
                let complement = view.to_competition_graph().complement();
                if complement.canonical_form() == path_form {
                    out.counterexample(view.to_digraph());
                }
            }
            ControlFlow::Continue(())
        })
        .unwrap();
    }
    out
}

/// Triangle-free graphs on 2..=6 vertices (canonical representatives).
fn triangle_free_classes(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut reps: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if !g.has_triangle() {
            reps.entry(g.canonical_form()).or_insert(g);
        }
    }
    reps.into_values().collect()
}

/// Exhaustive existence oracle: which triangle-free isomorphism classes on
/// `n` vertices arise as competition graphs of k-partite tournaments.
/// Enumerates every shape with k parts unpruned, independent of the size
/// bounds used by the classifier.
fn realizable_forms(n: usize, k: usize) -> BTreeSet<CanonicalForm> {
    let mut forms = BTreeSet::new();
    for s in classifier::all_shapes(n, k) {
        let u = OrientationUniverse::new(&s);
        let c = census(&u, Filter::TriangleFree, Prune::None).unwrap();
        forms.extend(c.keys().cloned());
    }
    forms
}

fn check_classifier_oracle() -> Outcome {
    let mut out = Outcome::new(
        "all triangle-free graphs on 2..=6 vertices, all k-partite shapes of matching order, k = 2..=5",
        0,
    );
    let mut compared = 0u64;
    for n in 2..=6usize {
        let classes = triangle_free_classes(n);
        out.note(format!("n={n}: {} triangle-free classes", classes.len()));
        for k in 2..=5usize {
            let realizable = realizable_forms(n, k);
            for g in &classes {
                let verdict = classifier::member(g, k).expect("triangle-free input");
                let truth = realizable.contains(&g.canonical_form());
                compared += 1;
                if verdict.member != truth {
                    out.fail(format!(
                        "n={n} k={k} {}: classifier says {}, enumeration says {truth}",
                        match match_components(g) {
                            Some((comps, iso)) => pattern_name(&comps, iso),
                            None => "unrecognized".into(),
                        },
                        verdict.member
                    ));
                }
            }
        }
    }
    out.universe_size = compared;
    out.note(format!("{compared} (graph, k) verdicts compared"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id_is_reported() {
        let reg = CheckRegistry::standard();
        assert!(matches!(reg.run("nonexistent"), Err(VerifyError::UnknownCheck(_))));
    }

    #[test]
    fn registry_covers_documented_checks() {
        let reg = CheckRegistry::standard();
        let ids = reg.ids();
        for required in [
            "K421-impossible",
            "connected-tripartite-census",
            "k6-forces-triangle",
            "five-partite",
            "fisher-min-edges",
            "kim-path-unions",
            "kim-cycle-unions",
            "no-cross-edges",
            "classifier-oracle",
            "witness-validation",
        ] {
            assert!(ids.contains(&required), "missing {required}");
        }
    }

    #[test]
    fn k421_check_passes() {
        let reg = CheckRegistry::standard();
        let report = reg.run("K421-impossible").unwrap();
        assert!(report.passed);
        assert_eq!(report.universe_size, 16384);
        assert!(report.census.as_ref().unwrap().is_empty());
    }

    #[test]
    fn injected_false_property_fails_with_counterexamples() {
        let mut reg = CheckRegistry::standard();
        reg.register("test-falsified", "deliberately wrong claim", || {
            let u = tournaments(4).unwrap();
            let mut out = Outcome::new("all 4-tournaments", u.size());
            u.visit(Prune::None, |view| {
                // false claim: every 4-tournament has at least 3 competition edges
                if view.competition_edge_count() < 3 {
                    out.counterexample(view.to_digraph());
                }
                ControlFlow::Continue(())
            })
            .unwrap();
            out
        });
        let report = reg.run("test-falsified").unwrap();
        assert!(!report.passed);
        // 24 labeled 4-tournaments have only 2 edges; the list is capped
        assert_eq!(report.counterexamples.len(), MAX_COUNTEREXAMPLES);
    }

    #[test]
    fn parallel_and_serial_reports_agree() {
        // run a fast subset both ways through the public interface
        let reg = CheckRegistry::standard();
        for id in ["K421-impossible", "isolated-vertex-lemma", "connected-4partite-census"] {
            let a = reg.run(id).unwrap();
            let b = reg.run(id).unwrap();
            assert_eq!(a.passed, b.passed);
            assert_eq!(a.universe_size, b.universe_size);
            assert_eq!(a.details, b.details);
            assert_eq!(a.counterexamples, b.counterexamples);
        }
    }

    /// The whole registry; run with `--ignored` (the cycle-union check
    /// enumerates ~5*10^7 orientations).
    #[test]
    #[ignore = "full suite, tens of seconds; the CLI `verify --all` runs it too"]
    fn full_registry_passes() {
        let reg = CheckRegistry::standard();
        let reports = reg.run_all(true);
        let failed: Vec<&str> =
            reports.iter().filter(|r| !r.passed).map(|r| r.check_id.as_str()).collect();
        assert!(failed.is_empty(), "failed checks: {failed:?}");
    }

    #[test]
    fn fisher_minimum_small_cases() {
        assert_eq!(min_competition_edges(2), 0);
        assert_eq!(min_competition_edges(3), 0);
        assert_eq!(min_competition_edges(4), 2);
        assert_eq!(min_competition_edges(5), 5);
    }

    #[test]
    fn census_examples() {
        // ((2,2,1), triangle-free-connected) has exactly the two 5-vertex trees
        let u = universe(&[2, 2, 1]);
        let c = census(&u, Filter::TriangleFreeConnected, Prune::IndegreeLe2).unwrap();
        let expected = forms_of(&[(&[Component::G1], 0), (&[Component::G2], 0)]);
        let got: BTreeSet<CanonicalForm> = c.keys().cloned().collect();
        assert_eq!(got, expected);
        // ((1,1), all) has a single class: the empty graph on 2 vertices
        let u = universe(&[1, 1]);
        let c = census(&u, Filter::All, Prune::None).unwrap();
        assert_eq!(c.counts().len(), 1);
        assert_eq!(c.total_matched(), 2);
    }
}
