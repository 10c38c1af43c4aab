//! The two term multisets behind the indices and the gap-function evaluators.
//!
//! For a connected graph the profile holds the decreasing distance sequence
//! `(d_i)` over all vertex pairs and the decreasing sequence `(n_i)` of
//! per-edge products of strictly-closer-vertex counts. Everything downstream
//! (index values, gap roots, certificates) reads from here.

use crate::graph::{DistanceMatrix, Graph, GraphError};
use crate::math;
use alloc::vec::Vec;

/// Scale factor for the root tolerance: a gap value counts as zero when
/// `|h(α)| <= GAP_TOLERANCE_SCALE · Σ n_i`. Relative to the term mass so
/// that graphs of every size get a comparable cutoff.
pub const GAP_TOLERANCE_SCALE: f64 = 1e-9;

/// Per-edge Szeged terms `n_u(v) * n_v(u)`, aligned with `g.edges()`.
///
/// A vertex `w` counts toward an endpoint only when strictly closer to it;
/// equidistant vertices count toward neither side.
pub fn szeged_edge_terms(g: &Graph, dm: &DistanceMatrix) -> Vec<u64> {
    let n = g.vertex_count();
    let mut terms = Vec::with_capacity(g.edge_count());
    for &(u, v) in g.edges() {
        let du = dm.row(u);
        let dv = dm.row(v);
        let mut closer_u = 0u64;
        let mut closer_v = 0u64;
        for w in 0..n {
            if du[w] < dv[w] {
                closer_u += 1;
            } else if dv[w] < du[w] {
                closer_v += 1;
            }
        }
        terms.push(closer_u * closer_v);
    }
    terms
}

/// The ordered (decreasing) Szeged term sequence `(n_i)`.
pub fn szeged_terms(g: &Graph, dm: &DistanceMatrix) -> Vec<u64> {
    let mut terms = szeged_edge_terms(g, dm);
    terms.sort_unstable_by(|a, b| b.cmp(a));
    terms
}

/// The ordered (decreasing) multiset of upper-triangle distances, length
/// `N = n(n-1)/2`.
pub fn distance_sequence(dm: &DistanceMatrix) -> Vec<u32> {
    let n = dm.vertex_count();
    let mut seq = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            seq.push(dm.get(u, v));
        }
    }
    seq.sort_unstable_by(|a, b| b.cmp(a));
    seq
}

/// The two ordered term multisets of a connected graph plus the counts the
/// certificate checks need.
#[derive(Debug, Clone)]
pub struct IndexProfile {
    d_seq: Vec<u32>,
    n_seq: Vec<u64>,
    /// (value, multiplicity) by decreasing value; collapsed form of `d_seq`
    /// so repeated gap evaluations cost O(#distinct values).
    d_census: Vec<(u32, u64)>,
    n_census: Vec<(u64, u64)>,
    vertex_count: usize,
    diam: u32,
    bipartite: bool,
    w_exact: u64,
    sz_exact: u64,
}

impl IndexProfile {
    /// Runs the all-pairs phase and assembles the profile.
    /// Errors on disconnected input.
    pub fn from_graph(g: &Graph) -> Result<Self, GraphError> {
        let dm = g.all_pairs_distances()?;
        Ok(Self::from_graph_with_matrix(g, &dm))
    }

    /// Assembles the profile from a precomputed matrix of `g`.
    pub fn from_graph_with_matrix(g: &Graph, dm: &DistanceMatrix) -> Self {
        let d_seq = distance_sequence(dm);
        let n_seq = szeged_terms(g, dm);
        let diam = d_seq.first().copied().unwrap_or(0);
        let w_exact: u64 = d_seq.iter().map(|&d| u64::from(d)).sum();
        let sz_exact: u64 = n_seq.iter().sum();
        let profile = IndexProfile {
            d_census: run_length(d_seq.iter().map(|&d| u64::from(d)))
                .into_iter()
                .map(|(v, c)| (v as u32, c))
                .collect(),
            n_census: run_length(n_seq.iter().copied()),
            d_seq,
            n_seq,
            vertex_count: g.vertex_count(),
            diam,
            bipartite: g.is_bipartite(),
            w_exact,
            sz_exact,
        };
        // The n-sequence majorizes the d-sequence for every graph; a failure
        // here is an implementation bug, not an input problem.
        debug_assert!(profile.n_majorizes_d());
        profile
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.n_seq.len()
    }

    /// `N = n(n-1)/2`.
    pub fn pair_count(&self) -> usize {
        self.d_seq.len()
    }

    pub fn diameter(&self) -> u32 {
        self.diam
    }

    pub fn bipartite(&self) -> bool {
        self.bipartite
    }

    /// `m == N`, equivalent to the graph being complete.
    pub fn is_complete(&self) -> bool {
        self.n_seq.len() == self.d_seq.len()
    }

    /// Decreasing distance sequence, length `N`.
    pub fn d_seq(&self) -> &[u32] {
        &self.d_seq
    }

    /// Decreasing Szeged term sequence, length `m`.
    pub fn n_seq(&self) -> &[u64] {
        &self.n_seq
    }

    /// `(value, multiplicity)` collapse of `d_seq`, decreasing by value.
    pub fn d_census(&self) -> &[(u32, u64)] {
        &self.d_census
    }

    /// `(value, multiplicity)` collapse of `n_seq`, decreasing by value.
    pub fn n_census(&self) -> &[(u64, u64)] {
        &self.n_census
    }

    /// Exact integer `(W, Sz)` at `α = 1`.
    pub fn classical_indices(&self) -> (u64, u64) {
        (self.w_exact, self.sz_exact)
    }

    /// `GAP_TOLERANCE_SCALE · Σ n_i`, the absolute cutoff for root residuals.
    pub fn gap_tolerance(&self) -> f64 {
        GAP_TOLERANCE_SCALE * self.sz_exact as f64
    }

    /// `W^α = Σ d_i^α`, compensated summation in decreasing term order.
    pub fn wiener_alpha(&self, alpha: f64) -> f64 {
        math::neumaier_sum(
            self.d_census.iter().map(|&(v, c)| c as f64 * math::pow(f64::from(v), alpha)),
        )
    }

    /// `Sz^α = Σ n_i^α`.
    pub fn szeged_alpha(&self, alpha: f64) -> f64 {
        math::neumaier_sum(
            self.n_census.iter().map(|&(v, c)| c as f64 * math::pow(v as f64, alpha)),
        )
    }

    /// `h(α) = Sz^α − W^α`.
    pub fn gap(&self, alpha: f64) -> f64 {
        self.szeged_alpha(alpha) - self.wiener_alpha(alpha)
    }

    /// `h'(α) = Σ ln(n_i) n_i^α − Σ ln(d_i) d_i^α`.
    ///
    /// Every term value is >= 1, so the logarithms are finite and
    /// distance-1 pairs and unit Szeged terms contribute nothing.
    pub fn gap_derivative(&self, alpha: f64) -> f64 {
        let plus = math::neumaier_sum(self.n_census.iter().map(|&(v, c)| {
            let vf = v as f64;
            c as f64 * math::ln(vf) * math::pow(vf, alpha)
        }));
        let minus = math::neumaier_sum(self.d_census.iter().map(|&(v, c)| {
            let vf = f64::from(v);
            c as f64 * math::ln(vf) * math::pow(vf, alpha)
        }));
        plus - minus
    }

    /// Borrowing evaluator handle for the root-finding layer.
    pub fn gap_fn(&self) -> GapFunction<'_> {
        GapFunction { profile: self }
    }

    /// Exact prefix-sum domination of the zero-padded `n_seq` over `d_seq`.
    pub fn n_majorizes_d(&self) -> bool {
        let mut sum_n = 0u64;
        let mut sum_d = 0u64;
        for (i, &d) in self.d_seq.iter().enumerate() {
            sum_n += self.n_seq.get(i).copied().unwrap_or(0);
            sum_d += u64::from(d);
            if sum_n < sum_d {
                return false;
            }
        }
        true
    }
}

/// Evaluator for `h(α)` over one profile; pure and cheap to copy around.
#[derive(Debug, Clone, Copy)]
pub struct GapFunction<'a> {
    profile: &'a IndexProfile,
}

impl<'a> GapFunction<'a> {
    pub fn profile(&self) -> &'a IndexProfile {
        self.profile
    }

    pub fn eval(&self, alpha: f64) -> f64 {
        self.profile.gap(alpha)
    }

    pub fn derivative(&self, alpha: f64) -> f64 {
        self.profile.gap_derivative(alpha)
    }

    /// `Σ n_i` as a float; the scale that relative root tolerances hang off.
    pub fn scale(&self) -> f64 {
        self.profile.sz_exact as f64
    }
}

fn run_length<I: IntoIterator<Item = u64>>(values: I) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = Vec::new();
    for v in values {
        match out.last_mut() {
            Some((last, count)) if *last == v => *count += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}
