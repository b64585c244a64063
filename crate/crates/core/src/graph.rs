//! Simple undirected graphs on up to 64 vertices, one bitset row per vertex.

use crate::bits;
use crate::canon::{self, CanonicalForm};
use crate::error::GraphError;
use crate::MAX_VERTICES;

/// A simple undirected graph. Adjacency is symmetric and loop-free; every
/// neighbor bit lies below the vertex count.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of the given order.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range
    /// endpoints. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.adj[u] |= bits::bit(v);
            g.adj[v] |= bits::bit(u);
        }
        Ok(g)
    }

    /// Rebuilds a graph from raw adjacency rows, validating the invariants.
    pub fn from_rows(rows: &[u64]) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mask = bits::low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange { vertex: 63 - (row & !mask).leading_zeros() as usize, order: n });
            }
            if row & bits::bit(v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
        }
        let mut g = Graph { n, adj: rows.to_vec() };
        // Symmetrize; single-direction rows are treated as undirected edges.
        for u in 0..n {
            for v in bits::iter_bits(g.adj[u]) {
                g.adj[v] |= bits::bit(u);
            }
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, order: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.check_pair(u, v).expect("add_edge: invalid endpoint");
        self.adj[u] |= bits::bit(v);
        self.adj[v] |= bits::bit(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bits::bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degree multiset in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edge_count(&self) -> usize {
        bits::edge_count(self.n, &self.adj) as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits::iter_bits(self.adj[u] & !bits::low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn has_triangle(&self) -> bool {
        bits::has_triangle(self.n, &self.adj)
    }

    pub fn is_connected(&self) -> bool {
        bits::is_connected(self.n, &self.adj)
    }

    /// Connected components as vertex bitsets, ordered by smallest member.
    /// Singletons are isolated vertices.
    pub fn components(&self) -> Vec<u64> {
        bits::component_masks(self.n, &self.adj)
    }

    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|&&r| r == 0).count()
    }

    pub fn complement(&self) -> Graph {
        let mask = bits::low_mask(self.n);
        let adj = (0..self.n)
            .map(|v| mask & !self.adj[v] & !bits::bit(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by the vertices of `mask`, re-indexed in ascending order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits::iter_bits(mask).collect();
        let mut g = Graph { n: verts.len(), adj: vec![0; verts.len()] };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= bits::bit(j);
                    g.adj[j] |= bits::bit(i);
                }
            }
        }
        g
    }

    /// Image of the graph under `perm`, where vertex `v` maps to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits::iter_bits(self.adj[u]) {
                adj[perm[u]] |= bits::bit(perm[v]);
            }
        }
        Graph { n: self.n, adj }
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_form_graph(self)
    }

    /// A vertex mapping sending `self` onto `other` exactly, if the graphs
    /// are isomorphic.
    pub fn isomorphism_to(&self, other: &Graph) -> Option<Vec<usize>> {
        canon::graph_isomorphism(self, other)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n == other.n && self.canonical_form() == other.canonical_form()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Path on `n` vertices, edges along consecutive indices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path order in range")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).expect("cycle order in range")
}

/// Star with `leaves` leaves: center 0 joined to 1..=leaves.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star order in range")
}
