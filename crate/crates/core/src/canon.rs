//! Exact canonical forms for small graphs and digraphs.
//!
//! Iterative color refinement seeded by degrees (indegree/outdegree pairs for
//! digraphs), followed by backtracking over the smallest color class; the
//! lexicographically least adjacency encoding over all visited discrete
//! colorings wins. Branches that individualize a twin of an already-explored
//! vertex are skipped, since the transposition is an automorphism and cannot
//! change the minimum.
//!
//! Completeness is enforced by tests against a factorial permutation oracle,
//! not assumed.

use crate::bits;
use crate::digraph::Digraph;
use crate::graph::Graph;

/// Opaque isomorphism certificate: equal forms iff isomorphic (same kind).
/// The byte layout is `[tag, n, packed adjacency bits of the canonical
/// labeling]`, so the canonical representative can be reconstructed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

const TAG_GRAPH: u8 = b'G';
const TAG_DIGRAPH: u8 = b'D';

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn is_graph(&self) -> bool {
        self.0[0] == TAG_GRAPH
    }

    pub fn order(&self) -> usize {
        self.0[1] as usize
    }

    /// Rebuilds the canonical representative of a graph form.
    pub fn to_graph(&self) -> Option<Graph> {
        if !self.is_graph() {
            return None;
        }
        let n = self.order();
        let payload = &self.0[2..];
        let mut edges = Vec::new();
        for (idx, (i, j)) in upper_pairs(n).enumerate() {
            if payload[idx / 8] & (0x80 >> (idx % 8)) != 0 {
                edges.push((i, j));
            }
        }
        Some(Graph::from_edges(n, &edges).expect("canonical payload is valid"))
    }

    /// Rebuilds the canonical representative of a digraph form.
    pub fn to_digraph(&self) -> Option<Digraph> {
        if self.is_graph() {
            return None;
        }
        let n = self.order();
        let payload = &self.0[2..];
        let mut arcs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let idx = i * n + j;
                if payload[idx / 8] & (0x80 >> (idx % 8)) != 0 {
                    arcs.push((i, j));
                }
            }
        }
        Some(Digraph::from_arcs(n, &arcs).expect("canonical payload is valid"))
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm({}:", self.0[0] as char)?;
        for b in &self.0[1..] {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Column-major upper-triangle pair order: (0,1),(0,2),(1,2),(0,3),...
fn upper_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

fn pack_bits(bits: impl Iterator<Item = bool>) -> Vec<u8> {
    let mut out = Vec::new();
    let mut cur = 0u8;
    let mut used = 0;
    for b in bits {
        cur = (cur << 1) | b as u8;
        used += 1;
        if used == 8 {
            out.push(cur);
            cur = 0;
            used = 0;
        }
    }
    if used > 0 {
        out.push(cur << (8 - used));
    }
    out
}

/// What the search needs to know about the structure being canonicalized.
trait CanonInput {
    fn size(&self) -> usize;
    fn seed_colors(&self) -> Vec<u32>;
    /// Refinement signature of `v` under the current coloring; must be
    /// invariant under color-preserving isomorphism.
    fn signature(&self, v: usize, color_of: &[u32], ncolors: usize) -> Vec<u32>;
    /// True iff swapping `u` and `v` is an automorphism.
    fn twin(&self, u: usize, v: usize) -> bool;
    /// Adjacency encoding with vertex `v` placed at position `pos_of[v]`.
    fn leaf_bytes(&self, pos_of: &[u32]) -> Vec<u8>;
}

struct GraphInput<'a> {
    g: &'a Graph,
}

impl CanonInput for GraphInput<'_> {
    fn size(&self) -> usize {
        self.g.order()
    }

    fn seed_colors(&self) -> Vec<u32> {
        rank_values(&(0..self.g.order()).map(|v| vec![self.g.degree(v) as u32]).collect::<Vec<_>>())
    }

    fn signature(&self, v: usize, color_of: &[u32], ncolors: usize) -> Vec<u32> {
        let mut sig = vec![0u32; ncolors];
        for u in bits::iter_bits(self.g.neighbors(v)) {
            sig[color_of[u] as usize] += 1;
        }
        sig
    }

    fn twin(&self, u: usize, v: usize) -> bool {
        self.g.neighbors(u) & !bits::bit(v) == self.g.neighbors(v) & !bits::bit(u)
    }

    fn leaf_bytes(&self, pos_of: &[u32]) -> Vec<u8> {
        let n = self.g.order();
        let mut vert_at = vec![0usize; n];
        for v in 0..n {
            vert_at[pos_of[v] as usize] = v;
        }
        let mut bytes = Vec::with_capacity(2 + (n * (n - 1) / 2 + 7) / 8);
        bytes.push(TAG_GRAPH);
        bytes.push(n as u8);
        bytes.extend(pack_bits(
            upper_pairs(n).map(|(i, j)| self.g.has_edge(vert_at[i], vert_at[j])),
        ));
        bytes
    }
}

struct DigraphInput<'a> {
    d: &'a Digraph,
    inn: Vec<u64>,
}

impl<'a> DigraphInput<'a> {
    fn new(d: &'a Digraph) -> Self {
        let inn = (0..d.order()).map(|v| d.in_neighbors(v)).collect();
        DigraphInput { d, inn }
    }
}

impl CanonInput for DigraphInput<'_> {
    fn size(&self) -> usize {
        self.d.order()
    }

    fn seed_colors(&self) -> Vec<u32> {
        rank_values(
            &(0..self.d.order())
                .map(|v| vec![self.inn[v].count_ones(), self.d.out_neighbors(v).count_ones()])
                .collect::<Vec<_>>(),
        )
    }

    fn signature(&self, v: usize, color_of: &[u32], ncolors: usize) -> Vec<u32> {
        let mut sig = vec![0u32; 2 * ncolors];
        for u in bits::iter_bits(self.d.out_neighbors(v)) {
            sig[color_of[u] as usize] += 1;
        }
        for u in bits::iter_bits(self.inn[v]) {
            sig[ncolors + color_of[u] as usize] += 1;
        }
        sig
    }

    fn twin(&self, u: usize, v: usize) -> bool {
        let bu = bits::bit(u);
        let bv = bits::bit(v);
        self.d.out_neighbors(u) & !bv == self.d.out_neighbors(v) & !bu
            && self.inn[u] & !bv == self.inn[v] & !bu
            && self.d.has_arc(u, v) == self.d.has_arc(v, u)
    }

    fn leaf_bytes(&self, pos_of: &[u32]) -> Vec<u8> {
        let n = self.d.order();
        let mut vert_at = vec![0usize; n];
        for v in 0..n {
            vert_at[pos_of[v] as usize] = v;
        }
        let mut bytes = Vec::with_capacity(2 + (n * n + 7) / 8);
        bytes.push(TAG_DIGRAPH);
        bytes.push(n as u8);
        let vert_at = &vert_at;
        bytes.extend(pack_bits(
            (0..n).flat_map(|i| (0..n).map(move |j| self.d.has_arc(vert_at[i], vert_at[j]))),
        ));
        bytes
    }
}

/// Dense ranks of a slice of comparable keys, preserving key order.
fn rank_values(keys: &[Vec<u32>]) -> Vec<u32> {
    let mut sorted: Vec<&Vec<u32>> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).expect("key present") as u32)
        .collect()
}

/// Refines to a stable coloring; returns the number of colors. Incoming
/// color values need not be dense; they are re-ranked first.
fn refine(input: &impl CanonInput, color_of: &mut [u32]) -> usize {
    let n = input.size();
    let mut distinct: Vec<u32> = color_of.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in color_of.iter_mut() {
        *c = distinct.binary_search(c).expect("own value") as u32;
    }
    let mut ncolors = distinct.len();
    loop {
        let mut keyed: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| (color_of[v], input.signature(v, color_of, ncolors), v))
            .collect();
        keyed.sort();
        let mut next = 0u32;
        let mut new_colors = vec![0u32; n];
        for i in 0..n {
            if i > 0 && (keyed[i].0, &keyed[i].1) != (keyed[i - 1].0, &keyed[i - 1].1) {
                next += 1;
            }
            new_colors[keyed[i].2] = next;
        }
        let new_count = next as usize + 1;
        color_of.copy_from_slice(&new_colors);
        if new_count == ncolors {
            return ncolors;
        }
        ncolors = new_count;
    }
}

struct Search<'a, I: CanonInput> {
    input: &'a I,
    best: Option<(Vec<u8>, Vec<u32>)>,
}

impl<I: CanonInput> Search<'_, I> {
    fn descend(&mut self, mut color_of: Vec<u32>) {
        let n = self.input.size();
        let ncolors = refine(self.input, &mut color_of);
        if ncolors == n {
            let bytes = self.input.leaf_bytes(&color_of);
            let better = match &self.best {
                None => true,
                Some((b, _)) => bytes < *b,
            };
            if better {
                self.best = Some((bytes, color_of));
            }
            return;
        }
        // Target cell: smallest non-singleton class, lowest color on ties.
        let mut cell_size = vec![0u32; ncolors];
        for &c in color_of.iter() {
            cell_size[c as usize] += 1;
        }
        let target = (0..ncolors)
            .filter(|&c| cell_size[c] > 1)
            .min_by_key(|&c| (cell_size[c], c))
            .expect("non-discrete coloring has a non-singleton class");
        let members: Vec<usize> = (0..n).filter(|&v| color_of[v] as usize == target).collect();
        let mut taken: Vec<usize> = Vec::new();
        for &v in &members {
            if taken.iter().any(|&u| self.input.twin(u, v)) {
                continue;
            }
            taken.push(v);
            // Individualize v ahead of its classmates; refinement renumbers.
            let mut child: Vec<u32> = color_of.iter().map(|&c| 2 * c + 1).collect();
            child[v] = 2 * color_of[v];
            self.descend(child);
        }
    }

    fn run(input: &I) -> (Vec<u8>, Vec<u32>) {
        let mut search = Search { input, best: None };
        search.descend(input.seed_colors());
        search.best.expect("at least one discrete coloring")
    }
}

pub fn canonical_form_graph(g: &Graph) -> CanonicalForm {
    CanonicalForm(Search::run(&GraphInput { g }).0)
}

pub fn canonical_form_digraph(d: &Digraph) -> CanonicalForm {
    CanonicalForm(Search::run(&DigraphInput::new(d)).0)
}

/// Canonical form together with a labeling that achieves it
/// (`labeling[v]` = position of `v` in the canonical order).
pub fn canonical_labeling_graph(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let (bytes, pos) = Search::run(&GraphInput { g });
    (CanonicalForm(bytes), pos.iter().map(|&p| p as usize).collect())
}

pub fn canonical_labeling_digraph(d: &Digraph) -> (CanonicalForm, Vec<usize>) {
    let (bytes, pos) = Search::run(&DigraphInput::new(d));
    (CanonicalForm(bytes), pos.iter().map(|&p| p as usize).collect())
}

fn compose_via_canonical(pa: &[usize], pb: &[usize]) -> Vec<usize> {
    let n = pa.len();
    let mut pb_inv = vec![0usize; n];
    for (v, &p) in pb.iter().enumerate() {
        pb_inv[p] = v;
    }
    pa.iter().map(|&p| pb_inv[p]).collect()
}

/// A vertex mapping taking `a` exactly onto `b`, when one exists.
pub fn graph_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let (fa, pa) = canonical_labeling_graph(a);
    let (fb, pb) = canonical_labeling_graph(b);
    if fa != fb {
        return None;
    }
    let mapping = compose_via_canonical(&pa, &pb);
    debug_assert!(a.relabeled(&mapping) == *b);
    Some(mapping)
}

/// A vertex mapping taking `a` exactly onto `b`, when one exists.
pub fn digraph_isomorphism(a: &Digraph, b: &Digraph) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let (fa, pa) = canonical_labeling_digraph(a);
    let (fb, pb) = canonical_labeling_digraph(b);
    if fa != fb {
        return None;
    }
    let mapping = compose_via_canonical(&pa, &pb);
    debug_assert!(a.relabeled(&mapping) == *b);
    Some(mapping)
}
