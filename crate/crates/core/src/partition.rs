//! Partite-set shapes, vertex partitions, and complete multipartite graphs.

use crate::bits;
use crate::error::GraphError;
use crate::graph::Graph;
use crate::MAX_VERTICES;

/// Multiset of partite-set sizes, stored in non-increasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartiteShape {
    sizes: Vec<usize>,
}

impl PartiteShape {
    pub fn new(sizes: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut sizes: Vec<usize> = sizes.into_iter().collect();
        if sizes.is_empty() {
            return Err(GraphError::BadShape("no partite sets".into()));
        }
        if sizes.iter().any(|&s| s == 0) {
            return Err(GraphError::BadShape("partite set of size 0".into()));
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_VERTICES {
            return Err(GraphError::BadShape(format!(
                "total order {total} exceeds {MAX_VERTICES}"
            )));
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartiteShape { sizes })
    }

    /// Shape of the complete graph on `n` vertices (all parts singletons).
    pub fn tournament(n: usize) -> Result<Self, GraphError> {
        PartiteShape::new(std::iter::repeat(1).take(n))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn part_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Edge count of the complete multipartite graph:
    /// the sum of `n_i * n_j` over part pairs.
    pub fn edge_count(&self) -> usize {
        let total = self.order();
        let squares: usize = self.sizes.iter().map(|s| s * s).sum();
        (total * total - squares) / 2
    }
}

impl std::fmt::Debug for PartiteShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "K{:?}", self.sizes)
    }
}

impl std::fmt::Display for PartiteShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A concrete assignment of vertices to parts, in canonical layout: the
/// vertices of part 0 come first, then part 1, and so on.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexPartition {
    shape: PartiteShape,
    part_of: Vec<usize>,
}

impl VertexPartition {
    pub fn canonical(shape: &PartiteShape) -> Self {
        let mut part_of = Vec::with_capacity(shape.order());
        for (i, &s) in shape.sizes().iter().enumerate() {
            part_of.extend(std::iter::repeat(i).take(s));
        }
        VertexPartition { shape: shape.clone(), part_of }
    }

    pub fn shape(&self) -> &PartiteShape {
        &self.shape
    }

    pub fn order(&self) -> usize {
        self.part_of.len()
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    /// Bitset of the vertices in part `i`.
    pub fn part_members(&self, i: usize) -> u64 {
        let mut m = 0u64;
        for (v, &p) in self.part_of.iter().enumerate() {
            if p == i {
                m |= bits::bit(v);
            }
        }
        m
    }

    pub fn parts(&self) -> Vec<u64> {
        (0..self.shape.part_count()).map(|i| self.part_members(i)).collect()
    }
}

impl std::fmt::Debug for VertexPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "VertexPartition({:?})", self.parts())
    }
}

/// The complete multipartite graph of a shape together with its canonical
/// vertex partition. Edges run exactly between distinct parts.
pub fn complete_multipartite(shape: &PartiteShape) -> (Graph, VertexPartition) {
    let partition = VertexPartition::canonical(shape);
    let n = shape.order();
    let mut g = Graph::empty(n).expect("shape order validated");
    for u in 0..n {
        for v in (u + 1)..n {
            if partition.part_of(u) != partition.part_of(v) {
                g.add_edge(u, v);
            }
        }
    }
    (g, partition)
}
