//! Tiny deterministic generator for seeded random universes.
//!
//! The verifier's randomized checks must reproduce byte-identical reports
//! across runs and platforms, so we fix the generator rather than depend on
//! an external RNG's stability guarantees.

use crate::digraph::Digraph;

/// SplitMix64; passes through a fixed seed deterministically.
#[derive(Clone)]
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// True with probability `percent`/100.
    pub fn chance(&mut self, percent: u64) -> bool {
        self.next_u64() % 100 < percent
    }
}

/// Loop-free digraph with each possible arc present independently with the
/// given percent probability; directed 2-cycles are allowed.
pub fn random_digraph(rng: &mut SplitMix64, n: usize, percent: u64) -> Digraph {
    let mut d = Digraph::arcless(n).expect("order in range");
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.chance(percent) {
                d.add_arc(u, v);
            }
        }
    }
    d
}

/// Random vertex permutation of 0..n (Fisher-Yates).
pub fn random_permutation(rng: &mut SplitMix64, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i + 1);
        perm.swap(i, j);
    }
    perm
}
