//! The `G_{k,ℓ}` family: a clique `K_k` with a Hamiltonian cycle removed,
//! every clique vertex joined to one end of a pendant path on `ℓ+1`
//! vertices.
//!
//! The family's index sums have closed forms, so its gap function can be
//! evaluated without building the graph; for suitable `(k, ℓ)` the gap has
//! three zeros in `(0, 1)`, which is what the grid search below hunts for.
//!
//! Closed forms (valid for `k >= 6`):
//!
//! * `W^α = C(k,2) + ℓ + (2k+ℓ−1)·2^α + Σ_{i=3}^{ℓ+1} (k+ℓ+1−i)·i^α`
//! * `Sz^α = k·4^α + (C(k,2)−2k)·9^α + k·(ℓ+3)^α + Σ_{i=1}^{ℓ} ((k+i)(ℓ+1−i))^α`

use crate::critical::{CriticalError, RootReport, ScanParams, DEFAULT_GRID_STEP, DEFAULT_SCAN_LO, DEFAULT_TOL_X};
use crate::graph::Graph;
use crate::invariants::GAP_TOLERANCE_SCALE;
use crate::math;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GklError {
    /// The closed forms assume `k >= 6` (below that the clique edge classes
    /// collapse into each other).
    KTooSmall { k: u32 },
    /// The pendant path needs at least one edge.
    EllTooSmall { ell: u32 },
    /// Bad scan window handed to the root counters.
    Scan(CriticalError),
}

impl fmt::Display for GklError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GklError::KTooSmall { k } => write!(f, "k = {k} too small, need k >= 6"),
            GklError::EllTooSmall { ell } => write!(f, "ell = {ell} too small, need ell >= 1"),
            GklError::Scan(e) => e.fmt(f),
        }
    }
}

impl From<CriticalError> for GklError {
    fn from(e: CriticalError) -> Self {
        GklError::Scan(e)
    }
}

/// Validated parameters of one family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GklParams {
    k: u32,
    ell: u32,
}

impl GklParams {
    pub fn new(k: u32, ell: u32) -> Result<Self, GklError> {
        if k < 6 {
            return Err(GklError::KTooSmall { k });
        }
        if ell < 1 {
            return Err(GklError::EllTooSmall { ell });
        }
        Ok(GklParams { k, ell })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// `n = k + ℓ + 1`.
    pub fn vertex_count(&self) -> usize {
        (self.k + self.ell + 1) as usize
    }

    /// `m = C(k,2) + ℓ`.
    pub fn edge_count(&self) -> usize {
        let k = self.k as usize;
        k * (k - 1) / 2 + self.ell as usize
    }

    /// Builds the graph: clique vertices are ids `0..k` (cycle edges
    /// `(i, i+1 mod k)` removed), the path occupies ids `k..=k+ℓ` with id
    /// `k` adjacent to every clique vertex.
    pub fn build(&self) -> Graph {
        let k = self.k;
        let ell = self.ell;
        let n = self.vertex_count();
        let mut edges = Vec::with_capacity(self.edge_count());
        for a in 0..k {
            for b in a + 1..k {
                let consecutive = b - a == 1 || (a == 0 && b == k - 1);
                if !consecutive {
                    edges.push((a, b));
                }
            }
        }
        for a in 0..k {
            edges.push((a, k));
        }
        for t in k..k + ell {
            edges.push((t, t + 1));
        }
        Graph::from_edges(n, edges).expect("construction emits distinct in-range edges")
    }

    /// Closed-form `W^α`.
    pub fn wiener_alpha_closed(&self, alpha: f64) -> f64 {
        let k = f64::from(self.k);
        let ell = f64::from(self.ell);
        let constant = k * (k - 1.0) / 2.0 + ell;
        let dist2 = (2.0 * k + ell - 1.0) * math::pow(2.0, alpha);
        let tail = (3..=self.ell + 1).map(|i| {
            (k + ell + 1.0 - f64::from(i)) * math::pow(f64::from(i), alpha)
        });
        math::neumaier_sum([constant, dist2].into_iter().chain(tail))
    }

    /// Closed-form `Sz^α`.
    pub fn szeged_alpha_closed(&self, alpha: f64) -> f64 {
        let k = f64::from(self.k);
        let ell = f64::from(self.ell);
        let head = [
            k * math::pow(4.0, alpha),
            (k * (k - 1.0) / 2.0 - 2.0 * k) * math::pow(9.0, alpha),
            k * math::pow(ell + 3.0, alpha),
        ];
        let path = (1..=self.ell).map(|i| {
            let term = f64::from(self.k + i) * f64::from(self.ell + 1 - i);
            math::pow(term, alpha)
        });
        math::neumaier_sum(head.into_iter().chain(path))
    }

    /// Closed-form gap `h(α) = Sz^α − W^α`.
    pub fn gap_closed(&self, alpha: f64) -> f64 {
        self.szeged_alpha_closed(alpha) - self.wiener_alpha_closed(alpha)
    }

    /// Closed-form `h'(α)`.
    pub fn gap_closed_derivative(&self, alpha: f64) -> f64 {
        let k = f64::from(self.k);
        let ell = f64::from(self.ell);
        let ln_pow = |x: f64| math::ln(x) * math::pow(x, alpha);
        let sz = [
            k * ln_pow(4.0),
            (k * (k - 1.0) / 2.0 - 2.0 * k) * ln_pow(9.0),
            k * ln_pow(ell + 3.0),
        ]
        .into_iter()
        .chain((1..=self.ell).map(|i| ln_pow(f64::from(self.k + i) * f64::from(self.ell + 1 - i))));
        let w = core::iter::once((2.0 * k + ell - 1.0) * ln_pow(2.0)).chain(
            (3..=self.ell + 1)
                .map(|i| (k + ell + 1.0 - f64::from(i)) * ln_pow(f64::from(i))),
        );
        math::neumaier_sum(sz) - math::neumaier_sum(w)
    }

    /// Exact integer `(W, Sz)` from the closed forms at `α = 1`.
    pub fn classical_closed(&self) -> (u64, u64) {
        let k = u64::from(self.k);
        let ell = u64::from(self.ell);
        let mut w = k * (k - 1) / 2 + ell + 2 * (2 * k + ell - 1);
        for i in 3..=ell + 1 {
            w += (k + ell + 1 - i) * i;
        }
        let mut sz = 4 * k + 9 * (k * (k - 1) / 2 - 2 * k) + k * (ell + 3);
        for i in 1..=ell {
            sz += (k + i) * (ell + 1 - i);
        }
        (w, sz)
    }
}

impl fmt::Display for GklParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.k, self.ell)
    }
}

/// The `(0, 1)` window the multi-root search counts in: same grid step and
/// bisection width as the default scan, capped at 1.
pub fn default_search_scan() -> ScanParams {
    ScanParams {
        lo: DEFAULT_SCAN_LO,
        hi: 1.0,
        step: DEFAULT_GRID_STEP,
        tol_x: DEFAULT_TOL_X,
    }
}

/// Scans the closed-form gap of one family member.
///
/// Grid values come from a per-term geometric recurrence
/// (`x^(α+step) = x^α · x^step`), so the sweep costs one multiply per term
/// per grid point instead of a `pow`; bisection refinement then runs on the
/// exact closed form. The recurrence drifts by at most a few hundred ulps
/// across the grid, far below the residual tolerance used for bracketing.
pub fn find_roots_closed(params: &GklParams, scan: &ScanParams) -> Result<RootReport, GklError> {
    scan.validate()?;
    let (_, sz) = params.classical_closed();
    let tol_f = GAP_TOLERANCE_SCALE * sz as f64;

    // signed closed-form terms: h(α) = Σ coeff · base^α
    let k = f64::from(params.k);
    let ell = f64::from(params.ell);
    let mut terms: Vec<(f64, f64)> = Vec::with_capacity(2 * params.ell as usize + 6);
    terms.push((k, 4.0));
    terms.push((k * (k - 1.0) / 2.0 - 2.0 * k, 9.0));
    terms.push((k, ell + 3.0));
    for i in 1..=params.ell {
        terms.push((1.0, f64::from(params.k + i) * f64::from(params.ell + 1 - i)));
    }
    terms.push((-(k * (k - 1.0) / 2.0 + ell), 1.0));
    terms.push((-(2.0 * k + ell - 1.0), 2.0));
    for i in 3..=params.ell + 1 {
        terms.push((-(k + ell + 1.0 - f64::from(i)), f64::from(i)));
    }

    let pts = crate::critical::grid_points(scan.lo, scan.hi, scan.step);
    let mut powers: Vec<f64> = terms.iter().map(|&(_, b)| math::pow(b, scan.lo)).collect();
    let ratios: Vec<f64> = terms.iter().map(|&(_, b)| math::pow(b, scan.step)).collect();
    let mut vals = Vec::with_capacity(pts.len());
    for (j, _) in pts.iter().enumerate() {
        if j + 1 == pts.len() {
            // the final point is pinned to `hi`, off the uniform lattice
            vals.push(params.gap_closed(scan.hi));
            break;
        }
        if j > 0 {
            for (p, r) in powers.iter_mut().zip(&ratios) {
                *p *= r;
            }
        }
        vals.push(math::neumaier_sum(
            terms.iter().zip(&powers).map(|(&(c, _), &p)| c * p),
        ));
    }

    Ok(crate::critical::assemble_report(
        &pts,
        &vals,
        |a| params.gap_closed(a),
        |a| params.gap_closed_derivative(a),
        scan,
        tol_f,
    ))
}

/// Number of sign-change roots of the closed-form gap over `scan`.
pub fn count_roots(params: &GklParams, scan: &ScanParams) -> Result<usize, GklError> {
    Ok(find_roots_closed(params, scan)?.roots.len())
}

/// Grid search over `(k, ℓ)` cells reporting every member whose closed-form
/// gap crosses zero at least three times on the scan window.
///
/// Runs entirely on the closed forms. One shared power table per grid
/// exponent serves every cell: the path-edge bases factor as
/// `((k+i)(ℓ+1−i))^α = (k+i)^α · (ℓ+1−i)^α`, so only integer bases up to
/// `k_max + ℓ_max` are ever powered.
pub fn search_multiroot(
    k_range: RangeInclusive<u32>,
    ell_range: RangeInclusive<u32>,
    scan: &ScanParams,
) -> Result<Vec<(GklParams, usize)>, GklError> {
    scan.validate()?;
    let mut cells: Vec<GklParams> = Vec::new();
    for k in k_range {
        for ell in ell_range.clone() {
            cells.push(GklParams::new(k, ell)?);
        }
    }
    if cells.is_empty() {
        return Ok(Vec::new());
    }
    let max_base = cells
        .iter()
        .map(|c| (c.k + c.ell) as usize)
        .max()
        .unwrap()
        .max(9);

    let alphas = crate::critical::grid_points(scan.lo, scan.hi, scan.step);

    let mut last_sign = alloc::vec![0i8; cells.len()];
    let mut crossings = alloc::vec![0usize; cells.len()];
    let mut table = alloc::vec![0.0f64; max_base + 1];
    for &alpha in &alphas {
        for (b, slot) in table.iter_mut().enumerate().skip(1) {
            *slot = math::pow(b as f64, alpha);
        }
        for (idx, cell) in cells.iter().enumerate() {
            let k = f64::from(cell.k);
            let ell = f64::from(cell.ell);
            let mut h = k * table[4] + (k * (k - 1.0) / 2.0 - 2.0 * k) * table[9]
                + k * table[(cell.ell + 3) as usize]
                - (k * (k - 1.0) / 2.0 + ell)
                - (2.0 * k + ell - 1.0) * table[2];
            for i in 1..=cell.ell {
                h += table[(cell.k + i) as usize] * table[(cell.ell + 1 - i) as usize];
            }
            for i in 3..=cell.ell + 1 {
                h -= (k + ell + 1.0 - f64::from(i)) * table[i as usize];
            }
            let sign = if h > 0.0 {
                1i8
            } else if h < 0.0 {
                -1
            } else {
                0
            };
            if sign != 0 {
                if last_sign[idx] != 0 && sign != last_sign[idx] {
                    crossings[idx] += 1;
                }
                last_sign[idx] = sign;
            }
        }
    }

    Ok(cells
        .into_iter()
        .zip(crossings)
        .filter(|&(_, c)| c >= 3)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::IndexProfile;

    #[test]
    fn parameter_validation() {
        assert!(GklParams::new(6, 1).is_ok());
        assert_eq!(GklParams::new(5, 1), Err(GklError::KTooSmall { k: 5 }));
        assert_eq!(GklParams::new(8, 0), Err(GklError::EllTooSmall { ell: 0 }));
    }

    #[test]
    fn build_sizes() {
        let g = GklParams::new(8, 5).unwrap().build();
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.edge_count(), 33);
        let g = GklParams::new(6, 1).unwrap().build();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 16);
        let p = GklParams::new(520, 82).unwrap();
        assert_eq!(p.vertex_count(), 603);
        assert_eq!(p.edge_count(), 135_022);
    }

    #[test]
    fn closed_forms_match_direct_computation() {
        for k in 6..=12 {
            for ell in 1..=6 {
                let params = GklParams::new(k, ell).unwrap();
                let profile = IndexProfile::from_graph(&params.build()).unwrap();
                // integer paths agree exactly
                assert_eq!(params.classical_closed(), profile.classical_indices(), "{params}");
                assert_eq!(params.wiener_alpha_closed(0.0), profile.pair_count() as f64);
                assert_eq!(params.szeged_alpha_closed(0.0), profile.edge_count() as f64);
                let (w, sz) = profile.classical_indices();
                assert_eq!(params.wiener_alpha_closed(1.0), w as f64);
                assert_eq!(params.szeged_alpha_closed(1.0), sz as f64);
                // fractional exponents agree to 1e-9 relative
                for alpha in [0.25, 0.5, 2.0] {
                    let (cw, dw) = (params.wiener_alpha_closed(alpha), profile.wiener_alpha(alpha));
                    assert!((cw - dw).abs() <= 1e-9 * dw.abs(), "{params} W at {alpha}: {cw} vs {dw}");
                    let (cs, ds) = (params.szeged_alpha_closed(alpha), profile.szeged_alpha(alpha));
                    assert!((cs - ds).abs() <= 1e-9 * ds.abs(), "{params} Sz at {alpha}: {cs} vs {ds}");
                }
            }
        }
    }

    #[test]
    fn gap_signs_at_endpoints() {
        for (k, ell) in [(6, 1), (8, 5), (12, 6), (40, 10)] {
            let params = GklParams::new(k, ell).unwrap();
            assert!(params.gap_closed(0.0) < 0.0, "{params} h(0)");
            assert!(params.gap_closed(1.0) > 0.0, "{params} h(1)");
        }
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let params = GklParams::new(9, 4).unwrap();
        for alpha in [0.1, 0.5, 1.0, 2.0] {
            let eps = 1e-6;
            let fd = (params.gap_closed(alpha + eps) - params.gap_closed(alpha - eps)) / (2.0 * eps);
            let an = params.gap_closed_derivative(alpha);
            assert!((fd - an).abs() <= 1e-5 * an.abs().max(1.0), "at {alpha}: {fd} vs {an}");
        }
    }

    #[test]
    fn root_counts() {
        let scan = default_search_scan();
        assert_eq!(count_roots(&GklParams::new(8, 5).unwrap(), &scan), Ok(1));
        assert_eq!(count_roots(&GklParams::new(520, 82).unwrap(), &scan), Ok(3));
    }

    #[test]
    fn small_grid_is_all_single_root() {
        let hits = search_multiroot(6..=12, 1..=6, &default_search_scan()).unwrap();
        assert!(hits.is_empty(), "{hits:?}");
    }

    #[test]
    fn empty_ranges_yield_empty_listings() {
        #[allow(clippy::reversed_empty_ranges)]
        let hits = search_multiroot(10..=9, 1..=6, &default_search_scan()).unwrap();
        assert!(hits.is_empty());
    }

    #[test]
    fn search_counts_agree_with_scan_counts() {
        // the power-table fast path and the plain closed-form scan must
        // count the same crossings
        let scan = default_search_scan();
        let hits = search_multiroot(519..=521, 81..=83, &scan).unwrap();
        for (params, count) in &hits {
            assert_eq!(count_roots(params, &scan), Ok(*count), "{params}");
        }
        assert!(hits.iter().any(|(p, c)| p.k() == 520 && p.ell() == 82 && *c == 3));
    }

    #[test]
    fn invalid_ranges_error() {
        assert!(search_multiroot(5..=7, 1..=2, &default_search_scan()).is_err());
        assert!(search_multiroot(6..=7, 0..=2, &default_search_scan()).is_err());
    }
}
