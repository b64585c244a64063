//! Loop-free directed graphs on up to 64 vertices, out-neighborhoods as bitsets.

use crate::bits;
use crate::canon::{self, CanonicalForm};
use crate::error::GraphError;
use crate::graph::Graph;
use crate::MAX_VERTICES;

/// A loop-free digraph. Directed 2-cycles are representable (they are only
/// excluded for orientations, which the enumeration module never produces).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

impl Digraph {
    pub fn arcless(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Digraph { n, out: vec![0; n] })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut d = Digraph::arcless(n)?;
        for &(u, v) in arcs {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            d.out[u] |= bits::bit(v);
        }
        Ok(d)
    }

    /// Wraps raw out-neighborhood rows; rows must already satisfy the invariants.
    pub(crate) fn from_rows_unchecked(rows: &[u64]) -> Self {
        debug_assert!(!rows.is_empty() && rows.len() <= MAX_VERTICES);
        debug_assert!(rows
            .iter()
            .enumerate()
            .all(|(v, &r)| r & bits::bit(v) == 0 && r & !bits::low_mask(rows.len()) == 0));
        Digraph { n: rows.len(), out: rows.to_vec() }
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "add_arc: invalid arc");
        self.out[u] |= bits::bit(v);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> u64 {
        self.out[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.out
    }

    pub fn in_neighbors(&self, v: usize) -> u64 {
        let mut m = 0u64;
        for u in 0..self.n {
            if self.out[u] & bits::bit(v) != 0 {
                m |= bits::bit(u);
            }
        }
        m
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] & bits::bit(v) != 0
    }

    #[inline]
    pub fn outdegree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.in_neighbors(v).count_ones() as usize
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.arc_count());
        for u in 0..self.n {
            for v in bits::iter_bits(self.out[u]) {
                out.push((u, v));
            }
        }
        out
    }

    /// Indegree and outdegree of every vertex; both sum to the arc count.
    pub fn degree_profile(&self) -> (Vec<usize>, Vec<usize>) {
        let outdeg: Vec<usize> = (0..self.n).map(|v| self.outdegree(v)).collect();
        let mut indeg = vec![0usize; self.n];
        for u in 0..self.n {
            for v in bits::iter_bits(self.out[u]) {
                indeg[v] += 1;
            }
        }
        (indeg, outdeg)
    }

    /// The competition graph: `uv` is an edge iff `u != v` and
    /// `out(u) ∩ out(v)` is nonempty.
    pub fn competition_graph(&self) -> Graph {
        let mut comp = vec![0u64; self.n];
        bits::competition_rows(self.n, &self.out, &mut comp);
        Graph::from_rows(&comp).expect("competition rows are valid")
    }

    /// The underlying undirected graph: `uv` is an edge iff either arc exists.
    pub fn underlying_graph(&self) -> Graph {
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            rows[u] |= self.out[u];
            for v in bits::iter_bits(self.out[u]) {
                rows[v] |= bits::bit(u);
            }
        }
        Graph::from_rows(&rows).expect("underlying rows are valid")
    }

    /// True iff `other` has the same vertex set and an arc subset of `self`.
    pub fn contains_subdigraph(&self, other: &Digraph) -> bool {
        self.n == other.n
            && (0..self.n).all(|v| other.out[v] & !self.out[v] == 0)
    }

    /// Image of the digraph under `perm`, where vertex `v` maps to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Digraph {
        debug_assert_eq!(perm.len(), self.n);
        let mut out = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits::iter_bits(self.out[u]) {
                out[perm[u]] |= bits::bit(perm[v]);
            }
        }
        Digraph { n: self.n, out }
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_form_digraph(self)
    }

    pub fn isomorphism_to(&self, other: &Digraph) -> Option<Vec<usize>> {
        canon::digraph_isomorphism(self, other)
    }

    pub fn is_isomorphic(&self, other: &Digraph) -> bool {
        self.n == other.n && self.canonical_form() == other.canonical_form()
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use crate::rng::{random_digraph, SplitMix64};

    #[test]
    fn single_common_prey() {
        // arcs u->w, v->w: single edge uv, w isolated
        let d = Digraph::from_arcs(3, &[(0, 2), (1, 2)]).unwrap();
        let c = d.competition_graph();
        assert_eq!(c.edges(), vec![(0, 1)]);
        assert_eq!(c.degree(2), 0);
    }

    #[test]
    fn arcless_competition_is_empty() {
        let d = Digraph::arcless(4).unwrap();
        let c = d.competition_graph();
        assert_eq!(c.order(), 4);
        assert_eq!(c.edge_count(), 0);
        assert_eq!(d.underlying_graph().edge_count(), 0);
    }

    /// The hexagon orientation of the complete tripartite graph with parts of
    /// size 2 has competition graph isomorphic to a 6-cycle.
    #[test]
    fn k222_orientation_gives_c6() {
        let d = Digraph::from_arcs(
            6,
            &[
                (4, 0), (5, 0), (0, 2), (1, 2), (2, 4), (3, 4),
                (5, 3), (0, 3), (1, 5), (2, 5), (3, 1), (4, 1),
            ],
        )
        .unwrap();
        let k222 = crate::partition::complete_multipartite(
            &crate::partition::PartiteShape::new([2, 2, 2]).unwrap(),
        )
        .0;
        assert!(d.underlying_graph().is_isomorphic(&k222));
        assert!(d.competition_graph().is_isomorphic(&graph::cycle(6)));
    }

    #[test]
    fn competition_matches_pairwise_oracle() {
        // Independent O(n^3) oracle: explicit triple loop over vertex pairs
        // and potential common out-neighbors.
        let mut rng = SplitMix64(0xc0ffee);
        for _ in 0..200 {
            let n = 2 + rng.below(9);
            let d = random_digraph(&mut rng, n, 30);
            let c = d.competition_graph();
            for u in 0..n {
                for v in 0..n {
                    if u == v {
                        continue;
                    }
                    let mut common = false;
                    for w in 0..n {
                        if w != u && w != v && d.has_arc(u, w) && d.has_arc(v, w) {
                            common = true;
                        }
                    }
                    assert_eq!(c.has_edge(u, v), common, "n={n} u={u} v={v}");
                }
            }
        }
    }

    #[test]
    fn degree_profile_sums_to_arcs() {
        let mut rng = SplitMix64(7);
        for _ in 0..50 {
            let n = 2 + rng.below(8);
            let d = random_digraph(&mut rng, n, 40);
            let (indeg, outdeg) = d.degree_profile();
            assert_eq!(indeg.iter().sum::<usize>(), d.arc_count());
            assert_eq!(outdeg.iter().sum::<usize>(), d.arc_count());
        }
    }

    #[test]
    fn subdigraph_competition_is_subgraph() {
        // Deleting arcs can only delete competition edges.
        let mut rng = SplitMix64(99);
        for _ in 0..200 {
            let n = 2 + rng.below(9);
            let d = random_digraph(&mut rng, n, 35);
            let arcs = d.arcs();
            let keep: Vec<(usize, usize)> = arcs
                .iter()
                .copied()
                .filter(|_| rng.next_u64() % 4 != 0)
                .collect();
            let sub = Digraph::from_arcs(n, &keep).unwrap();
            assert!(d.contains_subdigraph(&sub));
            let big = d.competition_graph();
            let small = sub.competition_graph();
            for (u, v) in small.edges() {
                assert!(big.has_edge(u, v));
            }
        }
    }
}
