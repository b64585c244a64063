//! Word-level kernels shared by the graph types and the enumeration loops.
//!
//! All functions operate on adjacency rows stored as one `u64` bitset per
//! vertex. The hot enumeration paths call these directly on stack buffers to
//! avoid materializing `Graph`/`Digraph` values per orientation.

/// Single-bit mask for vertex `v`.
#[inline(always)]
pub const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set (`n <= 64`).
#[inline(always)]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Fills `comp` with the competition adjacency of the digraph given by `out`:
/// `u ~ v` iff `u != v` and the out-neighborhoods intersect.
#[inline]
pub fn competition_rows(n: usize, out: &[u64], comp: &mut [u64]) {
    comp[..n].fill(0);
    for u in 0..n {
        let ou = out[u];
        if ou == 0 {
            continue;
        }
        for v in (u + 1)..n {
            if ou & out[v] != 0 {
                comp[u] |= bit(v);
                comp[v] |= bit(u);
            }
        }
    }
}

/// True iff the undirected adjacency contains three pairwise-adjacent vertices.
#[inline]
pub fn has_triangle(n: usize, adj: &[u64]) -> bool {
    for u in 0..n {
        let mut nbrs = adj[u] & !low_mask(u + 1);
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if adj[u] & adj[v] != 0 {
                return true;
            }
        }
    }
    false
}

/// Number of undirected edges.
#[inline]
pub fn edge_count(n: usize, adj: &[u64]) -> u32 {
    adj[..n].iter().map(|r| r.count_ones()).sum::<u32>() / 2
}

/// True iff all `n` vertices lie in one connected component.
#[inline]
pub fn is_connected(n: usize, adj: &[u64]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut seen = bit(0);
    let mut frontier = bit(0);
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == low_mask(n)
}

/// Vertex sets of the connected components, ordered by smallest member.
pub fn component_masks(n: usize, adj: &[u64]) -> Vec<u64> {
    let mut remaining = low_mask(n);
    let mut comps = Vec::new();
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        comps.push(seen);
        remaining &= !seen;
    }
    comps
}

/// Iterates the set bits of a mask in ascending order.
#[inline]
pub fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}
