//! Majorization on unequal-length sequences and the sufficient conditions
//! certifying that a gap-function root is unique.
//!
//! A decreasing sequence `x` majorizes a decreasing sequence `y` when every
//! prefix sum of `x` dominates the corresponding prefix sum of `y`, the
//! shorter sequence zero-padded. Uniqueness of a root `α` of
//! `h(α) = Sz^α − W^α` follows whenever the powered sequence `(n_i^α)`
//! majorizes `(d_i^α)`; everything else in this module is a cheaper
//! sufficient condition for that.

use crate::invariants::IndexProfile;
use crate::math;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Relative slack per prefix comparison on powered/log sequences, so that
/// floating-point powering cannot flip exact-equality prefixes.
pub const PREFIX_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceError {
    /// Input not sorted in decreasing order at `index`.
    NotDecreasing { index: usize },
    /// Precondition "x majorizes y" violated.
    NotMajorizing,
}

impl fmt::Display for SequenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceError::NotDecreasing { index } => {
                write!(f, "sequence not decreasing at index {index}")
            }
            SequenceError::NotMajorizing => write!(f, "first sequence does not majorize second"),
        }
    }
}

/// Which sufficient condition certified uniqueness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    /// `Sz = W` exactly; the unique crossing sits at `α = 1`.
    BlockGraph,
    /// Position-wise crossing: some `j` with `n_i >= d_i` for `i <= j` and
    /// `n_i <= d_i` beyond (zero-padded comparison). `crossing_index` is the
    /// largest admissible `j`.
    ConditionI { crossing_index: usize },
    /// Prefix products of `n` dominate prefix products of `d` up to `m`.
    ConditionII,
    /// `(n_i^α)` majorizes `(d_i^α)` verified directly at the root.
    PoweredMajorization,
    Bipartite,
    Diameter2,
    /// Diameter 3 with `m <= N/2`.
    Diameter3Sparse,
    /// Power-mean bound: `Σ d_i^α >= m·diam^α`.
    PowerMean,
    /// Edge count within the sparse regime `m <= (n^{4/3} − n^{1/3})/4`.
    SparseRegime,
}

impl CertificateKind {
    /// Stable kebab-case name (payload-free) for record output.
    pub fn name(&self) -> &'static str {
        match self {
            CertificateKind::BlockGraph => "block-graph",
            CertificateKind::ConditionI { .. } => "condition-i",
            CertificateKind::ConditionII => "condition-ii",
            CertificateKind::PoweredMajorization => "powered-majorization",
            CertificateKind::Bipartite => "bipartite",
            CertificateKind::Diameter2 => "diameter-2",
            CertificateKind::Diameter3Sparse => "diameter-3-sparse",
            CertificateKind::PowerMean => "power-mean",
            CertificateKind::SparseRegime => "sparse-regime",
        }
    }

    /// Strength rank used to pick the reported certificate; lower is
    /// stronger. Exact integer equality outranks the sequence conditions,
    /// which outrank the graph-class shortcuts that imply them.
    fn rank(&self) -> u8 {
        match self {
            CertificateKind::BlockGraph => 0,
            CertificateKind::ConditionI { .. } => 1,
            CertificateKind::ConditionII => 2,
            CertificateKind::PoweredMajorization => 3,
            CertificateKind::Bipartite => 4,
            CertificateKind::Diameter2 => 5,
            CertificateKind::Diameter3Sparse => 6,
            CertificateKind::PowerMean => 7,
            CertificateKind::SparseRegime => 8,
        }
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateKind::ConditionI { crossing_index } => {
                write!(f, "condition-i(j={crossing_index})")
            }
            other => f.write_str(other.name()),
        }
    }
}

/// Outcome of a uniqueness check: the strongest condition that holds plus
/// every condition that held, with free-form diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub holds: bool,
    /// Strongest holding kind; `None` when nothing held.
    pub kind: Option<CertificateKind>,
    /// Every kind that held, strongest first.
    pub holding: Vec<CertificateKind>,
    pub detail: String,
}

impl Certificate {
    fn single(kind: CertificateKind, holds: bool, detail: String) -> Self {
        Certificate {
            holds,
            kind: holds.then_some(kind),
            holding: if holds { alloc::vec![kind] } else { Vec::new() },
            detail,
        }
    }
}

/// Whether uniqueness could not be certified. `holds == false` means "not
/// certified", never "multiple roots exist" — the conditions are sufficient,
/// not necessary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CertifyError {
    /// `alpha_root` is not a root of the profile's gap within tolerance.
    NotARoot { alpha: f64, residual: f64, tolerance: f64 },
}

impl fmt::Display for CertifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyError::NotARoot { alpha, residual, tolerance } => write!(
                f,
                "alpha={alpha} is not a gap root: |h|={residual:e} exceeds tolerance {tolerance:e}"
            ),
        }
    }
}

fn check_decreasing_u64(x: &[u64]) -> Result<(), SequenceError> {
    for i in 1..x.len() {
        if x[i] > x[i - 1] {
            return Err(SequenceError::NotDecreasing { index: i });
        }
    }
    Ok(())
}

fn check_decreasing_f64(x: &[f64]) -> Result<(), SequenceError> {
    for i in 1..x.len() {
        if x[i] > x[i - 1] {
            return Err(SequenceError::NotDecreasing { index: i });
        }
    }
    Ok(())
}

/// Exact majorization test on decreasing nonnegative integer sequences.
/// Prefix sums run to `max(len(x), len(y))` with zero padding.
pub fn majorizes(x: &[u64], y: &[u64]) -> Result<bool, SequenceError> {
    check_decreasing_u64(x)?;
    check_decreasing_u64(y)?;
    let mut sum_x = 0u64;
    let mut sum_y = 0u64;
    for i in 0..x.len().max(y.len()) {
        sum_x += x.get(i).copied().unwrap_or(0);
        sum_y += y.get(i).copied().unwrap_or(0);
        if sum_x < sum_y {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Majorization on decreasing float sequences with tolerance: a prefix
/// passes when `lhs >= rhs − (rel_tol·|rhs| + abs_slack)`.
pub fn majorizes_f64(
    x: &[f64],
    y: &[f64],
    rel_tol: f64,
    abs_slack: f64,
) -> Result<bool, SequenceError> {
    check_decreasing_f64(x)?;
    check_decreasing_f64(y)?;
    let mut sum_x = math::NeumaierAcc::new();
    let mut sum_y = math::NeumaierAcc::new();
    for i in 0..x.len().max(y.len()) {
        sum_x.add(x.get(i).copied().unwrap_or(0.0));
        sum_y.add(y.get(i).copied().unwrap_or(0.0));
        let (lhs, rhs) = (sum_x.value(), sum_y.value());
        if lhs < rhs - (rel_tol * math::abs(rhs) + abs_slack) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Oracle for the integer-sequence Karamata adaptation: with `x` majorizing
/// `y`, `t = Σx − Σy`, and `f` convex increasing with `f(0)=0, f(1)=1`, the
/// inequality `Σ f(x_i) >= Σ f(y_i) + t` must hold. A `false` return
/// signals an implementation bug, not a property of the inputs.
pub fn karamata_gap_check<F: Fn(f64) -> f64>(
    x: &[u64],
    y: &[u64],
    f: F,
) -> Result<bool, SequenceError> {
    if !majorizes(x, y)? {
        return Err(SequenceError::NotMajorizing);
    }
    let t = x.iter().sum::<u64>() - y.iter().sum::<u64>();
    let lhs = math::neumaier_sum(x.iter().map(|&v| f(v as f64)));
    let rhs = math::neumaier_sum(y.iter().map(|&v| f(v as f64))) + t as f64;
    Ok(lhs >= rhs - PREFIX_REL_TOL * math::abs(rhs).max(math::abs(lhs)))
}

/// Largest admissible crossing index for the position-wise condition, if
/// one exists: `n_i >= d_i` up to `j` and `n_i <= d_i` beyond, comparing the
/// zero-padded `n` sequence against `d` over all `N` positions. Ties may
/// sit on either side of `j`.
pub fn condition_i_index(n_seq: &[u64], d_seq: &[u32]) -> Option<usize> {
    let total = d_seq.len().max(n_seq.len());
    let mut last_gt = 0usize; // 1-based position of the last strict n > d
    let mut first_lt = total + 1; // 1-based position of the first strict n < d
    for i in 0..total {
        let n_i = n_seq.get(i).copied().unwrap_or(0);
        let d_i = d_seq.get(i).copied().map(u64::from).unwrap_or(0);
        if n_i > d_i {
            last_gt = i + 1;
        } else if n_i < d_i && first_lt > total {
            first_lt = i + 1;
        }
    }
    (last_gt < first_lt).then_some(first_lt - 1)
}

/// Position-wise crossing condition on a profile.
pub fn check_condition_i(p: &IndexProfile) -> Certificate {
    match condition_i_index(p.n_seq(), p.d_seq()) {
        Some(j) => Certificate::single(
            CertificateKind::ConditionI { crossing_index: j },
            true,
            format!("n_i >= d_i for i <= {j}, n_i <= d_i beyond (zero-padded, N={})", p.pair_count()),
        ),
        None => Certificate::single(
            CertificateKind::ConditionI { crossing_index: 0 },
            false,
            String::from("no admissible crossing index"),
        ),
    }
}

/// Prefix-product condition over the first `min(len)` positions, in log
/// form to avoid overflow: returns the 1-based position of the first
/// failing prefix, or `None` when every prefix passes.
pub fn condition_ii_failure(n_seq: &[u64], d_seq: &[u32]) -> Option<usize> {
    let mut acc_n = math::NeumaierAcc::new();
    let mut acc_d = math::NeumaierAcc::new();
    for (i, &n_i) in n_seq.iter().enumerate().take(d_seq.len()) {
        acc_n.add(math::ln(n_i as f64));
        acc_d.add(math::ln(f64::from(d_seq[i])));
        let (lhs, rhs) = (acc_n.value(), acc_d.value());
        if lhs < rhs - PREFIX_REL_TOL * math::abs(rhs) {
            return Some(i + 1);
        }
    }
    None
}

/// Prefix-product condition: `Π_{i<=j} n_i >= Π_{i<=j} d_i` for every
/// `j <= m`.
pub fn check_condition_ii(p: &IndexProfile) -> Certificate {
    match condition_ii_failure(p.n_seq(), p.d_seq()) {
        None => Certificate::single(
            CertificateKind::ConditionII,
            true,
            format!("log prefix sums dominate through j = m = {}", p.edge_count()),
        ),
        Some(fail_at) => Certificate::single(
            CertificateKind::ConditionII,
            false,
            format!("log prefix sum falls short at j = {fail_at}"),
        ),
    }
}

/// Power-mean condition at exponent `alpha`, in the proof's equivalent form
/// `Σ d_i^α >= m·diam^α`. Not meaningful for `alpha <= 0`.
pub fn check_power_mean(p: &IndexProfile, alpha: f64) -> Certificate {
    if alpha <= 0.0 {
        return Certificate::single(
            CertificateKind::PowerMean,
            false,
            String::from("requires a positive exponent"),
        );
    }
    let lhs = p.wiener_alpha(alpha);
    let rhs = p.edge_count() as f64 * math::pow(f64::from(p.diameter()), alpha);
    Certificate::single(
        CertificateKind::PowerMean,
        lhs >= rhs,
        format!("sum d_i^a = {lhs:.6} vs m*diam^a = {rhs:.6} at a = {alpha}"),
    )
}

/// Sparse-regime bound `m <= (n^{4/3} − n^{1/3})/4`, i.e.
/// `m <= n^{1/3}(n−1)/4`, with the integer `m` compared exactly against the
/// floating-point bound.
pub fn check_sparse_regime(n: usize, m: usize) -> Certificate {
    let nf = n as f64;
    let bound = math::cbrt(nf) * (nf - 1.0) / 4.0;
    let holds = n >= 2 && (m as f64) <= bound;
    Certificate::single(
        CertificateKind::SparseRegime,
        holds,
        format!("m = {m} vs bound {bound:.6} at n = {n}"),
    )
}

/// Direct check of the uniqueness hypothesis at a root: does `(n_i^α)`
/// majorize `(d_i^α)`?
///
/// The final prefixes compare `Sz^α` against `W^α`, which differ by the
/// numeric root residual rather than exactly; that residual is granted as
/// absolute slack on every prefix.
pub fn check_powered_majorization(p: &IndexProfile, alpha: f64) -> Certificate {
    let slack = math::abs(p.gap(alpha));
    let mut sum_n = math::NeumaierAcc::new();
    let mut sum_d = math::NeumaierAcc::new();
    let mut ok = true;
    let mut fail_at = 0usize;
    let n_seq = p.n_seq();
    for (i, &d_i) in p.d_seq().iter().enumerate() {
        if let Some(&n_i) = n_seq.get(i) {
            sum_n.add(math::pow(n_i as f64, alpha));
        }
        sum_d.add(math::pow(f64::from(d_i), alpha));
        let (lhs, rhs) = (sum_n.value(), sum_d.value());
        if lhs < rhs - (PREFIX_REL_TOL * math::abs(rhs) + slack) {
            ok = false;
            fail_at = i + 1;
            break;
        }
    }
    let detail = if ok {
        format!("powered prefixes dominate at a = {alpha} (residual slack {slack:e})")
    } else {
        format!("powered prefix falls short at position {fail_at} for a = {alpha}")
    };
    Certificate::single(CertificateKind::PoweredMajorization, ok, detail)
}

/// Runs every uniqueness condition at a located root and reports the
/// strongest one that holds.
///
/// Checks are evaluated cheapest-first; the returned `kind` is the highest
/// ranked of all holding kinds and `holding` lists the rest. `holds ==
/// false` means no condition certified the root — it never asserts that
/// further roots exist.
pub fn certify_uniqueness(p: &IndexProfile, alpha_root: f64) -> Result<Certificate, CertifyError> {
    let tolerance = p.gap_tolerance();
    let residual = math::abs(p.gap(alpha_root));
    if !(alpha_root > 0.0) || residual > tolerance {
        return Err(CertifyError::NotARoot { alpha: alpha_root, residual, tolerance });
    }

    let (w, sz) = p.classical_indices();
    let mut holding: Vec<CertificateKind> = Vec::new();
    let mut notes: Vec<String> = Vec::new();

    let sparse = check_sparse_regime(p.vertex_count(), p.edge_count());
    if sparse.holds {
        holding.push(CertificateKind::SparseRegime);
    }
    notes.push(sparse.detail);

    if sz == w {
        holding.push(CertificateKind::BlockGraph);
        notes.push(format!("Sz = W = {w} exactly; crossing pinned at alpha = 1"));
    }
    if p.bipartite() {
        holding.push(CertificateKind::Bipartite);
    }
    if p.diameter() == 2 {
        holding.push(CertificateKind::Diameter2);
    }
    if p.diameter() == 3 && 2 * p.edge_count() <= p.pair_count() {
        holding.push(CertificateKind::Diameter3Sparse);
    }

    let cond_i = check_condition_i(p);
    if cond_i.holds {
        holding.extend(cond_i.holding.iter().copied());
    }
    let cond_ii = check_condition_ii(p);
    if cond_ii.holds {
        holding.push(CertificateKind::ConditionII);
    }
    let mean = check_power_mean(p, alpha_root);
    if mean.holds {
        holding.push(CertificateKind::PowerMean);
    }
    let powered = check_powered_majorization(p, alpha_root);
    if powered.holds {
        holding.push(CertificateKind::PoweredMajorization);
    }

    holding.sort_by_key(CertificateKind::rank);
    let kind = holding.first().copied();
    let detail = if holding.is_empty() {
        format!("no sufficient condition holds at alpha = {alpha_root}; {}", notes.join("; "))
    } else {
        let names: Vec<&str> = holding.iter().map(CertificateKind::name).collect();
        format!("holding: {}", names.join(", "))
    };
    Ok(Certificate { holds: kind.is_some(), kind, holding, detail })
}
