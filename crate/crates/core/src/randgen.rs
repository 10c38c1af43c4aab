//! Seeded random connected graphs.
//!
//! All randomness flows from [`SplitMix64`], which is fully specified here
//! so any implementation in any language can reproduce the streams: state
//! advances by the golden-gamma constant and the output is a two-round
//! xor-multiply mix,
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! output = z ^ (z >> 31)
//! ```
//!
//! (all arithmetic modulo 2^64). From seed 0 the first outputs are
//! `0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F`.

use crate::graph::Graph;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// Attempt budget for rejection sampling before reporting failure.
pub const RETRY_CAP: u64 = 100_000;

/// The counter-based 64-bit generator described in the module docs.
/// Identical seed and draw sequence give identical values on every
/// platform; instances are independent and own their state.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` by rejecting the biased tail band.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % bound;
            }
        }
    }

    /// Uniform in `[0, 1)` with the top 53 bits.
    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform unordered pair of distinct vertices below `n`.
    fn next_pair(&mut self, n: u64) -> (u32, u32) {
        loop {
            let u = self.next_below(n) as u32;
            let v = self.next_below(n) as u32;
            if u != v {
                return (u.min(v), u.max(v));
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RandError {
    /// `m` outside `[n-1, n(n-1)/2]`: no connected graph has that size.
    InfeasibleEdgeCount { n: usize, m: usize },
    /// `p` outside `(0, 1]`.
    InvalidProbability { p: f64 },
    /// Rejection sampling exhausted its attempt budget.
    RetryCapExceeded { attempts: u64 },
}

impl fmt::Display for RandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RandError::InfeasibleEdgeCount { n, m } => {
                write!(f, "no connected graph with n={n}, m={m}")
            }
            RandError::InvalidProbability { p } => write!(f, "edge probability {p} not in (0, 1]"),
            RandError::RetryCapExceeded { attempts } => {
                write!(f, "no connected sample after {attempts} attempts")
            }
        }
    }
}

/// Uniform connected graph with `n` vertices and exactly `m` edges, by
/// rejection: draw a uniform `m`-subset of pairs, retry while disconnected.
/// Deterministic per seed; errors after [`RETRY_CAP`] attempts with the
/// attempt count.
pub fn random_gnm_connected(n: usize, m: usize, seed: u64) -> Result<Graph, RandError> {
    let pairs = n * n.saturating_sub(1) / 2;
    if m < n.saturating_sub(1) || m > pairs {
        return Err(RandError::InfeasibleEdgeCount { n, m });
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..RETRY_CAP {
        let mut chosen: BTreeSet<(u32, u32)> = BTreeSet::new();
        while chosen.len() < m {
            chosen.insert(rng.next_pair(n as u64));
        }
        let g = Graph::from_edges(n, chosen).expect("sampled edges are distinct and in range");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(RandError::RetryCapExceeded { attempts: RETRY_CAP })
}

/// Connected sample of `G(n, p)`: every pair appears independently with
/// probability `p`, rejected until connected. Deterministic per seed.
pub fn random_gnp_connected(n: usize, p: f64, seed: u64) -> Result<Graph, RandError> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(RandError::InvalidProbability { p });
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for _ in 0..RETRY_CAP {
        edges.clear();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if rng.next_unit() < p {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges.iter().copied())
            .expect("pair sweep emits distinct in-range edges");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(RandError::RetryCapExceeded { attempts: RETRY_CAP })
}
