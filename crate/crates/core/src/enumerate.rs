//! Exhaustive enumeration of orientations of complete multipartite graphs.
//!
//! An orientation universe fixes the base graph's edge list in lexicographic
//! order; orientation number `c` orients edge `b` away from its
//! lower-indexed endpoint exactly when bit `b` of `c` is zero. Every stream
//! and search visits orientations in ascending counter order, so first-found
//! results and golden fixtures are reproducible.
//!
//! Searching for triangle-free competition graphs admits a sound prune: a
//! vertex of indegree 3 forces a triangle among its in-neighbors, so any
//! branch that pushes an indegree above 2 can be cut without changing the
//! result set.

use std::collections::{BTreeMap, HashMap};
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::bits;
use crate::canon::CanonicalForm;
use crate::digraph::Digraph;
use crate::error::EnumerationError;
use crate::graph::Graph;
use crate::partition::{complete_multipartite, PartiteShape, VertexPartition};

/// Largest edge count enumerable through the streaming API (2^30 items).
pub const MAX_UNIVERSE_EDGES: usize = 30;

/// Indegree bound used while assigning edges.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Prune {
    /// Visit all `2^m` orientations.
    None,
    /// Cut branches forcing an indegree above 2. Sound exactly when the
    /// predicate implies a triangle-free competition graph.
    IndegreeLe2,
}

impl Prune {
    fn cap(self) -> u8 {
        match self {
            Prune::None => u8::MAX,
            Prune::IndegreeLe2 => 2,
        }
    }
}

/// All orientations of a complete multipartite graph.
#[derive(Clone)]
pub struct OrientationUniverse {
    shape: PartiteShape,
    partition: VertexPartition,
    base: Graph,
    edges: Vec<(u8, u8)>,
}

impl OrientationUniverse {
    pub fn new(shape: &PartiteShape) -> Self {
        let (base, partition) = complete_multipartite(shape);
        let edges = base.edges().iter().map(|&(u, v)| (u as u8, v as u8)).collect();
        OrientationUniverse { shape: shape.clone(), partition, base, edges }
    }

    pub fn shape(&self) -> &PartiteShape {
        &self.shape
    }

    pub fn partition(&self) -> &VertexPartition {
        &self.partition
    }

    pub fn base_graph(&self) -> &Graph {
        &self.base
    }

    /// Base edges in the fixed lexicographic order.
    pub fn base_edges(&self) -> &[(u8, u8)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    /// Stream length `2^m`.
    pub fn size(&self) -> u64 {
        1u64 << self.edges.len()
    }

    fn check_size(&self) -> Result<(), EnumerationError> {
        if self.edges.len() > MAX_UNIVERSE_EDGES {
            Err(EnumerationError::UniverseTooLarge { edges: self.edges.len() })
        } else {
            Ok(())
        }
    }

    /// The orientation selected by an m-bit counter.
    pub fn digraph_at(&self, counter: u64) -> Digraph {
        let n = self.order();
        let mut rows = [0u64; 64];
        for (b, &(u, v)) in self.edges.iter().enumerate() {
            if counter >> b & 1 == 0 {
                rows[u as usize] |= bits::bit(v as usize);
            } else {
                rows[v as usize] |= bits::bit(u as usize);
            }
        }
        Digraph::from_rows_unchecked(&rows[..n])
    }

    /// Streams all `2^m` orientations in counter order.
    pub fn orientations(&self) -> Result<Orientations<'_>, EnumerationError> {
        self.check_size()?;
        Ok(Orientations { universe: self, next: 0, end: self.size() })
    }

    /// Visits every orientation (respecting `prune`) in counter order,
    /// exposing the orientation and its competition graph as raw rows.
    /// Returning `ControlFlow::Break` stops the walk early.
    pub fn visit<F>(&self, prune: Prune, mut f: F) -> Result<(), EnumerationError>
    where
        F: FnMut(&CompetitionView<'_>) -> ControlFlow<()>,
    {
        self.check_size()?;
        let mut walker = Walker {
            n: self.order(),
            edges: &self.edges,
            cap: prune.cap(),
            out: [0u64; 64],
            indeg: [0u8; 64],
            comp: [0u64; 64],
            f: &mut f,
        };
        let top = self.edges.len();
        let _ = walker.descend(top);
        Ok(())
    }
}

/// Iterator over all orientations in counter order.
pub struct Orientations<'a> {
    universe: &'a OrientationUniverse,
    next: u64,
    end: u64,
}

impl Iterator for Orientations<'_> {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.next == self.end {
            return None;
        }
        let d = self.universe.digraph_at(self.next);
        self.next += 1;
        Some(d)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = (self.end - self.next) as usize;
        (rem, Some(rem))
    }
}

/// All labeled tournaments on `n` vertices (orientations of the complete
/// graph), for `2 <= n <= 7`.
pub fn tournaments(n: usize) -> Result<OrientationUniverse, EnumerationError> {
    if !(2..=7).contains(&n) {
        return Err(EnumerationError::TournamentOrder(n));
    }
    let shape = PartiteShape::tournament(n).expect("small order");
    Ok(OrientationUniverse::new(&shape))
}

/// An orientation and its competition graph, borrowed from the search stack.
pub struct CompetitionView<'a> {
    n: usize,
    out: &'a [u64],
    comp: &'a [u64],
}

impl CompetitionView<'_> {
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn out_rows(&self) -> &[u64] {
        &self.out[..self.n]
    }

    #[inline]
    pub fn competition_rows(&self) -> &[u64] {
        &self.comp[..self.n]
    }

    #[inline]
    pub fn triangle_free(&self) -> bool {
        !bits::has_triangle(self.n, self.comp)
    }

    #[inline]
    pub fn connected(&self) -> bool {
        bits::is_connected(self.n, self.comp)
    }

    pub fn competition_edge_count(&self) -> usize {
        bits::edge_count(self.n, self.comp) as usize
    }

    pub fn arc_count(&self) -> usize {
        self.out[..self.n].iter().map(|r| r.count_ones() as usize).sum()
    }

    #[inline]
    pub fn outdegree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn indegrees(&self) -> Vec<usize> {
        let mut indeg = vec![0usize; self.n];
        for u in 0..self.n {
            for v in bits::iter_bits(self.out[u]) {
                indeg[v] += 1;
            }
        }
        indeg
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_rows_unchecked(&self.out[..self.n])
    }

    pub fn to_competition_graph(&self) -> Graph {
        Graph::from_rows(&self.comp[..self.n]).expect("competition rows valid")
    }
}

struct Walker<'a, F: FnMut(&CompetitionView<'_>) -> ControlFlow<()>> {
    n: usize,
    edges: &'a [(u8, u8)],
    cap: u8,
    out: [u64; 64],
    indeg: [u8; 64],
    comp: [u64; 64],
    f: &'a mut F,
}

impl<F: FnMut(&CompetitionView<'_>) -> ControlFlow<()>> Walker<'_, F> {
    /// Assigns edges from index `level - 1` down to 0; zero branch first, so
    /// leaves appear in ascending counter order.
    fn descend(&mut self, level: usize) -> ControlFlow<()> {
        if level == 0 {
            bits::competition_rows(self.n, &self.out, &mut self.comp);
            let view = CompetitionView { n: self.n, out: &self.out, comp: &self.comp };
            return (self.f)(&view);
        }
        let (u, v) = self.edges[level - 1];
        let (u, v) = (u as usize, v as usize);
        if self.indeg[v] < self.cap {
            self.out[u] |= bits::bit(v);
            self.indeg[v] += 1;
            let flow = self.descend(level - 1);
            self.indeg[v] -= 1;
            self.out[u] &= !bits::bit(v);
            flow?;
        }
        if self.indeg[u] < self.cap {
            self.out[v] |= bits::bit(u);
            self.indeg[u] += 1;
            let flow = self.descend(level - 1);
            self.indeg[u] -= 1;
            self.out[v] &= !bits::bit(u);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Histogram of competition graphs over isomorphism classes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Census {
    filter: String,
    universe_size: u64,
    counts: BTreeMap<CanonicalForm, u64>,
}

impl Census {
    pub fn new(filter: impl Into<String>, universe_size: u64) -> Self {
        Census { filter: filter.into(), universe_size, counts: BTreeMap::new() }
    }

    pub fn filter(&self) -> &str {
        &self.filter
    }

    pub fn universe_size(&self) -> u64 {
        self.universe_size
    }

    pub fn counts(&self) -> &BTreeMap<CanonicalForm, u64> {
        &self.counts
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalForm> {
        self.counts.keys()
    }

    pub fn record(&mut self, form: CanonicalForm, count: u64) {
        *self.counts.entry(form).or_insert(0) += count;
    }

    /// Total orientations matching the filter.
    pub fn total_matched(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn contains(&self, form: &CanonicalForm) -> bool {
        self.counts.contains_key(form)
    }

    /// Folds another census (over disjoint orientations of the same
    /// universe) into this one. Counts add; the universe size is shared.
    pub fn absorb(&mut self, other: Census) {
        debug_assert_eq!(self.universe_size, other.universe_size);
        for (k, c) in other.counts {
            self.record(k, c);
        }
    }

    /// Merges censuses of distinct universes (e.g. several shapes): counts
    /// add and universe sizes accumulate.
    pub fn union(&mut self, other: &Census) {
        self.universe_size += other.universe_size;
        for (k, &c) in &other.counts {
            self.record(k.clone(), c);
        }
    }
}

/// Built-in census filters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Filter {
    All,
    TriangleFree,
    TriangleFreeConnected,
    TriangleFreeDisconnected,
}

impl Filter {
    pub fn name(self) -> &'static str {
        match self {
            Filter::All => "all",
            Filter::TriangleFree => "triangle-free",
            Filter::TriangleFreeConnected => "triangle-free-connected",
            Filter::TriangleFreeDisconnected => "triangle-free-disconnected",
        }
    }

    pub fn from_name(name: &str) -> Option<Filter> {
        match name {
            "all" => Some(Filter::All),
            "triangle-free" => Some(Filter::TriangleFree),
            "triangle-free-connected" => Some(Filter::TriangleFreeConnected),
            "triangle-free-disconnected" => Some(Filter::TriangleFreeDisconnected),
            _ => None,
        }
    }

    pub fn accepts(self, view: &CompetitionView<'_>) -> bool {
        match self {
            Filter::All => true,
            Filter::TriangleFree => view.triangle_free(),
            Filter::TriangleFreeConnected => view.triangle_free() && view.connected(),
            Filter::TriangleFreeDisconnected => view.triangle_free() && !view.connected(),
        }
    }

    /// Whether the filter implies a triangle-free competition graph, which
    /// is what makes indegree pruning sound.
    pub fn implies_triangle_free(self) -> bool {
        !matches!(self, Filter::All)
    }
}

/// Census over a built-in filter. Rejects prune/filter combinations that are
/// statically unsound.
pub fn census(
    universe: &OrientationUniverse,
    filter: Filter,
    prune: Prune,
) -> Result<Census, EnumerationError> {
    if prune == Prune::IndegreeLe2 && !filter.implies_triangle_free() {
        return Err(EnumerationError::UnsoundPrune(filter.name().into()));
    }
    search_with(universe, prune, filter.name(), |view| filter.accepts(view))
}

/// Census over an arbitrary predicate on (orientation, competition graph).
///
/// With `Prune::IndegreeLe2` the caller asserts that the predicate implies a
/// triangle-free competition graph; prune soundness for the built-in
/// triangle-free filters is cross-checked by tests against unpruned runs.
/// Work fans out over disjoint counter-prefix subtrees and is merged by
/// summing counts, so the result does not depend on scheduling.
pub fn search_with<F>(
    universe: &OrientationUniverse,
    prune: Prune,
    filter_name: &str,
    predicate: F,
) -> Result<Census, EnumerationError>
where
    F: Fn(&CompetitionView<'_>) -> bool + Sync,
{
    universe.check_size()?;
    let m = universe.edge_count();
    // Debug builds cross-check pruned runs against an unpruned recount on
    // small universes; the caller asserts the predicate implies a
    // triangle-free competition graph, and this catches violations.
    #[cfg(debug_assertions)]
    if prune == Prune::IndegreeLe2 && m <= 10 {
        let pruned = search_with_inner(universe, prune, filter_name, &predicate)?;
        let full = search_with_inner(universe, Prune::None, filter_name, &predicate)?;
        assert_eq!(
            pruned, full,
            "indegree pruning changed the census for filter `{filter_name}`"
        );
        return Ok(pruned);
    }
    search_with_inner(universe, prune, filter_name, &predicate)
}

fn search_with_inner<F>(
    universe: &OrientationUniverse,
    prune: Prune,
    filter_name: &str,
    predicate: &F,
) -> Result<Census, EnumerationError>
where
    F: Fn(&CompetitionView<'_>) -> bool + Sync,
{
    let m = universe.edge_count();
    let split_bits = m.saturating_sub(14).min(10);
    let mut census = Census::new(filter_name, universe.size());
    if split_bits == 0 {
        let mut local: HashMap<Vec<u64>, u64> = HashMap::new();
        universe.visit(prune, |view| {
            if predicate(view) {
                *local.entry(view.competition_rows().to_vec()).or_insert(0) += 1;
            }
            ControlFlow::Continue(())
        })?;
        fold_labeled(&mut census, local);
        return Ok(census);
    }

    let n = universe.order();
    let edges = universe.base_edges();
    let cap = prune.cap();
    let parts: Vec<BTreeMap<CanonicalForm, u64>> = (0u64..(1 << split_bits))
        .into_par_iter()
        .map(|prefix| {
            let mut out = [0u64; 64];
            let mut indeg = [0u8; 64];
            let mut feasible = true;
            for t in 0..split_bits {
                let (u, v) = edges[m - 1 - t];
                let (u, v) = (u as usize, v as usize);
                let (src, dst) = if prefix >> (split_bits - 1 - t) & 1 == 0 { (u, v) } else { (v, u) };
                out[src] |= bits::bit(dst);
                indeg[dst] += 1;
                if indeg[dst] > cap {
                    feasible = false;
                    break;
                }
            }
            let mut local: HashMap<Vec<u64>, u64> = HashMap::new();
            if feasible {
                let mut record = |view: &CompetitionView<'_>| {
                    if predicate(view) {
                        *local.entry(view.competition_rows().to_vec()).or_insert(0) += 1;
                    }
                    ControlFlow::Continue(())
                };
                let mut walker = Walker {
                    n,
                    edges,
                    cap,
                    out,
                    indeg,
                    comp: [0u64; 64],
                    f: &mut record,
                };
                let _ = walker.descend(m - split_bits);
            }
            let mut part = BTreeMap::new();
            let mut memo: HashMap<Vec<u64>, CanonicalForm> = HashMap::new();
            for (rows, count) in local {
                let form = memo
                    .entry(rows.clone())
                    .or_insert_with(|| {
                        Graph::from_rows(&rows).expect("competition rows valid").canonical_form()
                    })
                    .clone();
                *part.entry(form).or_insert(0) += count;
            }
            part
        })
        .collect();
    for part in parts {
        for (k, c) in part {
            census.record(k, c);
        }
    }
    Ok(census)
}

fn fold_labeled(census: &mut Census, local: HashMap<Vec<u64>, u64>) {
    for (rows, count) in local {
        let form = Graph::from_rows(&rows).expect("competition rows valid").canonical_form();
        census.record(form, count);
    }
}

/// Scans the universe in ascending counter order for the first orientation
/// whose competition graph satisfies the predicate.
pub fn first_match<F>(
    universe: &OrientationUniverse,
    prune: Prune,
    predicate: F,
) -> Result<Option<Digraph>, EnumerationError>
where
    F: Fn(&CompetitionView<'_>) -> bool,
{
    let mut found = None;
    universe.visit(prune, |view| {
        if predicate(view) {
            found = Some(view.to_digraph());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}
