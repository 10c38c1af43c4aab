//! Root location for the gap function `h(α) = Sz^α − W^α` and the
//! per-graph verdicts built on top of it.
//!
//! `h` is scanned on a positive grid; every sign change is bracketed and
//! refined by bisection. Grid cells that come within tolerance of zero
//! without a sign change are reported as suspected tangencies rather than
//! roots — bisection cannot bracket an even-multiplicity crossing, and a
//! near miss is not a zero.

use crate::invariants::{GapFunction, IndexProfile};
use crate::majorization::{certify_uniqueness, Certificate};
use crate::math;
use alloc::vec::Vec;
use core::fmt;

/// Default scan interval `(1e-3, 1.5]`. Every crossing of interest lies in
/// `(0, 1]` — beyond 1 the powered Szeged sum strictly dominates — so 1.5
/// is pure margin; this is observed, not assumed, by the scan itself.
pub const DEFAULT_SCAN_LO: f64 = 1e-3;
pub const DEFAULT_SCAN_HI: f64 = 1.5;
pub const DEFAULT_GRID_STEP: f64 = 1e-3;
/// Bisection refines brackets below this width.
pub const DEFAULT_TOL_X: f64 = 1e-10;

/// Grid-scan parameters for [`find_roots`] and [`scan_roots`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanParams {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
    pub tol_x: f64,
}

impl Default for ScanParams {
    fn default() -> Self {
        ScanParams {
            lo: DEFAULT_SCAN_LO,
            hi: DEFAULT_SCAN_HI,
            step: DEFAULT_GRID_STEP,
            tol_x: DEFAULT_TOL_X,
        }
    }
}

impl ScanParams {
    pub(crate) fn validate(&self) -> Result<(), CriticalError> {
        let ok = self.lo.is_finite()
            && self.hi.is_finite()
            && self.step.is_finite()
            && self.lo > 0.0
            && self.hi > self.lo
            && self.step > 0.0
            && self.tol_x > 0.0
            && (self.hi - self.lo) / self.step <= 2e7;
        if ok {
            Ok(())
        } else {
            Err(CriticalError::InvalidScan {
                lo: self.lo,
                hi: self.hi,
                step: self.step,
            })
        }
    }
}

/// One located root of `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub alpha: f64,
    /// Final bisection bracket. Endpoints carry opposite signs of `h`,
    /// except for the degenerate `(α, α)` bracket of an exact zero.
    pub bracket: (f64, f64),
    /// Sign of `h'` at the root: -1, 0, or +1.
    pub derivative_sign: i8,
}

/// Outcome of one scan: crossings, suspected tangencies, and the scan setup.
#[derive(Debug, Clone, PartialEq)]
pub struct RootReport {
    pub scan: (f64, f64),
    pub grid_step: f64,
    /// Roots sorted by increasing `alpha`.
    pub roots: Vec<Root>,
    /// Merged grid intervals where `|h|` dipped below tolerance without a
    /// sign change, away from any bracketed root.
    pub suspected_tangencies: Vec<(f64, f64)>,
    /// Absolute residual tolerance used (`1e-9 · Σ n_i` for profiles).
    pub gap_tolerance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CriticalError {
    /// Scan interval must satisfy `0 < lo < hi`, `step > 0`, sane size.
    InvalidScan { lo: f64, hi: f64, step: f64 },
    /// Complete graphs have `h ≡ 0`; there is nothing to scan.
    CompleteGraph,
    /// The weak-conjecture check takes exponents strictly above 1.
    AlphaNotAboveOne { alpha: f64 },
}

impl fmt::Display for CriticalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriticalError::InvalidScan { lo, hi, step } => {
                write!(f, "invalid scan interval lo={lo} hi={hi} step={step}")
            }
            CriticalError::CompleteGraph => write!(f, "degenerate: h = 0 identically (complete graph)"),
            CriticalError::AlphaNotAboveOne { alpha } => {
                write!(f, "alpha={alpha} not above 1")
            }
        }
    }
}

/// Grid points `lo, lo+step, …` with `hi` always included as the last point.
pub(crate) fn grid_points(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let mut pts = Vec::new();
    let mut i = 0u64;
    loop {
        let a = lo + i as f64 * step;
        if a >= hi - 1e-12 * step {
            pts.push(hi);
            break;
        }
        pts.push(a);
        i += 1;
    }
    pts
}

/// Scans an arbitrary continuous function for sign-change roots on a grid
/// and refines each bracket by bisection.
///
/// `tol_f` is the absolute residual below which a value counts as zero
/// (used for the tangency report and the root residual requirement);
/// `derivative` is only consulted to classify located roots.
pub fn scan_roots<F, D>(
    f: F,
    derivative: D,
    params: &ScanParams,
    tol_f: f64,
) -> Result<RootReport, CriticalError>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    params.validate()?;
    let pts = grid_points(params.lo, params.hi, params.step);
    let vals: Vec<f64> = pts.iter().map(|&a| f(a)).collect();
    Ok(assemble_report(&pts, &vals, f, derivative, params, tol_f))
}

/// Brackets, refines and classifies the roots of `f` given its values on
/// the grid `pts`. Callers that can evaluate the whole grid faster than
/// point-by-point (uniform-grid power recurrences) enter here.
pub(crate) fn assemble_report<F, D>(
    pts: &[f64],
    vals: &[f64],
    f: F,
    derivative: D,
    params: &ScanParams,
    tol_f: f64,
) -> RootReport
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let mut roots: Vec<Root> = Vec::new();
    // exact zeros on grid points are roots with a degenerate bracket
    for (i, &v) in vals.iter().enumerate() {
        if v == 0.0 {
            roots.push(Root {
                alpha: pts[i],
                bracket: (pts[i], pts[i]),
                derivative_sign: sign_of(derivative(pts[i])),
            });
        }
    }

    let cells = pts.len() - 1;
    let mut cell_has_bracket = alloc::vec![false; cells];
    for i in 0..cells {
        let (fa, fb) = (vals[i], vals[i + 1]);
        if fa != 0.0 && fb != 0.0 && (fa > 0.0) != (fb > 0.0) {
            cell_has_bracket[i] = true;
            let (alpha, bracket) = bisect(&f, pts[i], pts[i + 1], fa, params.tol_x, tol_f);
            roots.push(Root {
                alpha,
                bracket,
                derivative_sign: sign_of(derivative(alpha)),
            });
        }
    }

    // near-zero cells without a crossing, not adjacent to any located root
    let mut flagged = alloc::vec![false; cells];
    for i in 0..cells {
        if cell_has_bracket[i] || vals[i] == 0.0 || vals[i + 1] == 0.0 {
            continue;
        }
        let near_bracket = (i > 0 && cell_has_bracket[i - 1])
            || (i + 1 < cells && cell_has_bracket[i + 1])
            || (i > 0 && vals[i - 1] == 0.0)
            || (i + 2 < vals.len() && vals[i + 2] == 0.0);
        if near_bracket {
            continue;
        }
        if math::abs(vals[i]).min(math::abs(vals[i + 1])) <= tol_f {
            flagged[i] = true;
        }
    }
    let mut tangencies: Vec<(f64, f64)> = Vec::new();
    let mut i = 0;
    while i < cells {
        if flagged[i] {
            let start = i;
            while i < cells && flagged[i] {
                i += 1;
            }
            tangencies.push((pts[start], pts[i]));
        } else {
            i += 1;
        }
    }

    roots.sort_by(|a, b| a.alpha.partial_cmp(&b.alpha).unwrap());
    RootReport {
        scan: (params.lo, params.hi),
        grid_step: params.step,
        roots,
        suspected_tangencies: tangencies,
        gap_tolerance: tol_f,
    }
}

fn sign_of(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

/// Bisection on a sign-change bracket; refines until the bracket is
/// narrower than `tol_x` *and* the returned point's residual is within
/// `tol_f`. The returned `alpha` is the last tested midpoint, which is an
/// endpoint of the returned bracket.
fn bisect<F: Fn(f64) -> f64>(
    f: &F,
    mut a: f64,
    mut b: f64,
    mut fa: f64,
    tol_x: f64,
    tol_f: f64,
) -> (f64, (f64, f64)) {
    debug_assert!(fa != 0.0);
    let mut alpha = 0.5 * (a + b);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        let fm = f(mid);
        alpha = mid;
        if fm == 0.0 {
            return (mid, (mid, mid));
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        if b - a <= tol_x && math::abs(fm) <= tol_f {
            break;
        }
    }
    (alpha, (a, b))
}

/// Scans the profile-backed gap function. Complete graphs are rejected as
/// degenerate (`h ≡ 0`); for everything connected and non-complete, a scan
/// covering `(0, 1]` reports at least one root.
pub fn find_roots(gap: &GapFunction<'_>, params: &ScanParams) -> Result<RootReport, CriticalError> {
    if gap.profile().is_complete() {
        return Err(CriticalError::CompleteGraph);
    }
    let tol_f = gap.profile().gap_tolerance();
    scan_roots(|a| gap.eval(a), |a| gap.derivative(a), params, tol_f)
}

/// Per-graph verdict on uniqueness of the crossing exponent.
#[derive(Debug, Clone, PartialEq)]
pub enum StrongVerdict {
    /// Exactly one crossing located and a uniqueness certificate holds.
    CertifiedUnique { alpha: f64, certificate: Certificate },
    /// Two or more crossings: the single-crossing claim fails for this graph.
    MultipleRoots { count: usize },
    /// One crossing located numerically, but nothing certifies uniqueness.
    SingleRootUncertified { alpha: f64 },
}

impl StrongVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            StrongVerdict::CertifiedUnique { .. } => "certified-unique",
            StrongVerdict::MultipleRoots { .. } => "multiple-roots",
            StrongVerdict::SingleRootUncertified { .. } => "single-root-uncertified",
        }
    }
}

/// Renders the verdict for a scanned profile.
///
/// `Sz = W` (exact integers) pins the unique crossing at `α = 1` before any
/// floating point is consulted; otherwise the scanned roots decide and a
/// single root goes through [`certify_uniqueness`].
pub fn strong_conjecture_verdict(p: &IndexProfile, report: &RootReport) -> StrongVerdict {
    let (w, sz) = p.classical_indices();
    if sz == w {
        if let Ok(cert) = certify_uniqueness(p, 1.0) {
            if cert.holds {
                return StrongVerdict::CertifiedUnique { alpha: 1.0, certificate: cert };
            }
        }
    }
    match report.roots.len() {
        0 => StrongVerdict::SingleRootUncertified { alpha: f64::NAN },
        1 => {
            let alpha = report.roots[0].alpha;
            match certify_uniqueness(p, alpha) {
                Ok(cert) if cert.holds => StrongVerdict::CertifiedUnique { alpha, certificate: cert },
                _ => StrongVerdict::SingleRootUncertified { alpha },
            }
        }
        count => StrongVerdict::MultipleRoots { count },
    }
}

/// Strengthened weak-conjecture check: `h(α) > h(1) >= 0` for every
/// supplied `α > 1`. Errors on a complete graph or an exponent `<= 1`.
pub fn weak_conjecture_check(gap: &GapFunction<'_>, alphas: &[f64]) -> Result<bool, CriticalError> {
    let p = gap.profile();
    if p.is_complete() {
        return Err(CriticalError::CompleteGraph);
    }
    for &a in alphas {
        if !(a > 1.0) {
            return Err(CriticalError::AlphaNotAboveOne { alpha: a });
        }
    }
    let (w, sz) = p.classical_indices();
    debug_assert!(sz >= w);
    let h1 = sz as f64 - w as f64;
    Ok(alphas.iter().all(|&a| gap.eval(a) > h1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::invariants::IndexProfile;
    use crate::majorization::CertificateKind;

    fn profile(g: &crate::graph::Graph) -> IndexProfile {
        IndexProfile::from_graph(g).unwrap()
    }

    #[test]
    fn c4_root_matches_closed_form() {
        // 4·4^α = 4 + 2·2^α  ⇒  α = log2((1+√17)/4)
        let expected = ((1.0 + 17.0f64.sqrt()) / 4.0).log2();
        let p = profile(&cycle(4));
        let report = find_roots(&p.gap_fn(), &ScanParams::default()).unwrap();
        assert_eq!(report.roots.len(), 1);
        let root = report.roots[0];
        assert!((root.alpha - expected).abs() <= 1e-8, "{} vs {expected}", root.alpha);
        assert!(root.bracket.1 - root.bracket.0 <= DEFAULT_TOL_X);
        assert!(p.gap(root.alpha).abs() <= p.gap_tolerance());
        assert_eq!(root.derivative_sign, 1);
        assert!(report.suspected_tangencies.is_empty());
    }

    #[test]
    fn p3_root_at_one() {
        let p = profile(&path(3));
        let report = find_roots(&p.gap_fn(), &ScanParams::default()).unwrap();
        assert_eq!(report.roots.len(), 1);
        assert!((report.roots[0].alpha - 1.0).abs() <= 1e-8);
    }

    #[test]
    fn exact_grid_zero_is_a_root() {
        let p = profile(&path(3));
        let params = ScanParams { lo: 0.5, hi: 1.5, step: 0.25, ..ScanParams::default() };
        let report = find_roots(&p.gap_fn(), &params).unwrap();
        assert_eq!(report.roots.len(), 1);
        let root = report.roots[0];
        assert_eq!(root.alpha, 1.0);
        assert_eq!(root.bracket, (1.0, 1.0));
        assert!(report.suspected_tangencies.is_empty());
    }

    #[test]
    fn complete_graph_is_degenerate() {
        let p = profile(&complete(4));
        assert_eq!(
            find_roots(&p.gap_fn(), &ScanParams::default()).err(),
            Some(CriticalError::CompleteGraph)
        );
    }

    #[test]
    fn scan_validation() {
        let p = profile(&cycle(4));
        for bad in [
            ScanParams { lo: 0.0, ..ScanParams::default() },
            ScanParams { lo: 2.0, hi: 1.0, ..ScanParams::default() },
            ScanParams { step: 0.0, ..ScanParams::default() },
            ScanParams { step: -0.1, ..ScanParams::default() },
        ] {
            assert!(matches!(
                find_roots(&p.gap_fn(), &bad),
                Err(CriticalError::InvalidScan { .. })
            ));
        }
    }

    #[test]
    fn verdicts_for_named_graphs() {
        let tree = profile(&path(6));
        let report = find_roots(&tree.gap_fn(), &ScanParams::default()).unwrap();
        match strong_conjecture_verdict(&tree, &report) {
            StrongVerdict::CertifiedUnique { alpha, certificate } => {
                assert_eq!(alpha, 1.0);
                assert_eq!(certificate.kind, Some(CertificateKind::BlockGraph));
            }
            other => panic!("expected certified verdict, got {other:?}"),
        }

        let c4 = profile(&cycle(4));
        let report = find_roots(&c4.gap_fn(), &ScanParams::default()).unwrap();
        match strong_conjecture_verdict(&c4, &report) {
            StrongVerdict::CertifiedUnique { alpha, certificate } => {
                assert!(alpha < 1.0);
                assert!(matches!(certificate.kind, Some(CertificateKind::ConditionI { .. })));
                assert!(certificate.holding.contains(&CertificateKind::Bipartite));
            }
            other => panic!("expected certified verdict, got {other:?}"),
        }
    }

    #[test]
    fn weak_checks() {
        let c4 = profile(&cycle(4));
        // h(2) = 64 − 12 = 52 > h(1) = 8
        assert_eq!(c4.gap(2.0), 52.0);
        assert_eq!(weak_conjecture_check(&c4.gap_fn(), &[2.0]), Ok(true));
        let p3 = profile(&path(3));
        assert_eq!(p3.gap(2.0), 2.0);
        assert_eq!(weak_conjecture_check(&p3.gap_fn(), &[1.1, 1.5, 2.0, 3.0]), Ok(true));
        assert_eq!(
            weak_conjecture_check(&c4.gap_fn(), &[1.0]),
            Err(CriticalError::AlphaNotAboveOne { alpha: 1.0 })
        );
        let k4 = profile(&complete(4));
        assert_eq!(weak_conjecture_check(&k4.gap_fn(), &[2.0]), Err(CriticalError::CompleteGraph));
    }

    #[test]
    fn grid_includes_hi_exactly_once() {
        let pts = grid_points(0.1, 1.0, 0.1);
        assert_eq!(pts.len(), 10);
        assert_eq!(*pts.last().unwrap(), 1.0);
        let pts = grid_points(1e-3, 1.5, 1e-3);
        assert_eq!(pts.len(), 1500);
        assert_eq!(*pts.last().unwrap(), 1.5);
    }
}
