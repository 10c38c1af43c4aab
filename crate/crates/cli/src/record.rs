//! The analysis record: everything one run prints, as one struct that
//! round-trips through JSON and renders to line-oriented `key=value` text.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use szw_core::critical::{RootReport, StrongVerdict};
use szw_core::IndexProfile;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaRow {
    pub alpha: f64,
    pub w_alpha: f64,
    pub sz_alpha: f64,
    pub h: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootRow {
    pub alpha: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub derivative_sign: i8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrongRow {
    /// `certified-unique`, `multiple-roots`, or `single-root-uncertified`.
    pub verdict: String,
    pub alpha: Option<f64>,
    /// Name of the strongest holding certificate, when certified.
    pub certificate: Option<String>,
    /// Every certificate kind that held, strongest first.
    pub certificates: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeakRow {
    pub holds: bool,
    pub alphas: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub input: String,
    pub n: usize,
    pub m: usize,
    #[serde(rename = "N")]
    pub pair_count: usize,
    pub diam: u32,
    pub w: u64,
    pub sz: u64,
    /// `h ≡ 0` (complete graph): nothing to scan.
    pub degenerate: bool,
    pub alphas: Vec<AlphaRow>,
    pub scan: Option<ScanRow>,
    pub roots: Vec<RootRow>,
    pub tangencies: Vec<(f64, f64)>,
    pub strong: Option<StrongRow>,
    pub weak: Option<WeakRow>,
    pub seed: Option<u64>,
    pub elapsed_ms: f64,
}

impl AnalysisRecord {
    pub fn from_profile(input: impl Into<String>, profile: &IndexProfile) -> Self {
        let (w, sz) = profile.classical_indices();
        AnalysisRecord {
            input: input.into(),
            n: profile.vertex_count(),
            m: profile.edge_count(),
            pair_count: profile.pair_count(),
            diam: profile.diameter(),
            w,
            sz,
            degenerate: false,
            alphas: Vec::new(),
            scan: None,
            roots: Vec::new(),
            tangencies: Vec::new(),
            strong: None,
            weak: None,
            seed: None,
            elapsed_ms: 0.0,
        }
    }

    pub fn attach_report(&mut self, report: &RootReport) {
        self.scan = Some(ScanRow {
            lo: report.scan.0,
            hi: report.scan.1,
            step: report.grid_step,
        });
        self.roots = report
            .roots
            .iter()
            .map(|r| RootRow {
                alpha: r.alpha,
                bracket_lo: r.bracket.0,
                bracket_hi: r.bracket.1,
                derivative_sign: r.derivative_sign,
            })
            .collect();
        self.tangencies = report.suspected_tangencies.clone();
    }

    pub fn attach_verdict(&mut self, verdict: &StrongVerdict) {
        let row = match verdict {
            StrongVerdict::CertifiedUnique { alpha, certificate } => StrongRow {
                verdict: verdict.name().into(),
                alpha: Some(*alpha),
                certificate: certificate.kind.map(|k| k.name().into()),
                certificates: certificate.holding.iter().map(|k| k.name().into()).collect(),
            },
            StrongVerdict::MultipleRoots { .. } => StrongRow {
                verdict: verdict.name().into(),
                alpha: None,
                certificate: None,
                certificates: Vec::new(),
            },
            StrongVerdict::SingleRootUncertified { alpha } => StrongRow {
                verdict: verdict.name().into(),
                alpha: alpha.is_finite().then_some(*alpha),
                certificate: None,
                certificates: Vec::new(),
            },
        };
        self.strong = Some(row);
    }

    /// Line-oriented rendering: one logical item per line, space-separated
    /// `key=value` pairs, floats printed shortest-round-trip.
    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input={}", self.input);
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "m={}", self.m);
        let _ = writeln!(out, "N={}", self.pair_count);
        let _ = writeln!(out, "diam={}", self.diam);
        let _ = writeln!(out, "W={}", self.w);
        let _ = writeln!(out, "Sz={}", self.sz);
        let _ = writeln!(out, "degenerate={}", self.degenerate);
        for row in &self.alphas {
            let _ = writeln!(
                out,
                "alpha={} w_alpha={} sz_alpha={} h={}",
                row.alpha, row.w_alpha, row.sz_alpha, row.h
            );
        }
        if let Some(scan) = &self.scan {
            let _ = writeln!(out, "scan_lo={} scan_hi={} grid_step={}", scan.lo, scan.hi, scan.step);
        }
        if self.scan.is_some() {
            let _ = writeln!(out, "roots={}", self.roots.len());
        }
        for r in &self.roots {
            let _ = writeln!(
                out,
                "root={} bracket_lo={} bracket_hi={} dsign={:+}",
                r.alpha, r.bracket_lo, r.bracket_hi, r.derivative_sign
            );
        }
        for (lo, hi) in &self.tangencies {
            let _ = writeln!(out, "tangency_lo={lo} tangency_hi={hi}");
        }
        if let Some(strong) = &self.strong {
            let mut line = format!("strong={}", strong.verdict);
            if let Some(alpha) = strong.alpha {
                let _ = write!(line, " strong_alpha={alpha}");
            }
            if let Some(cert) = &strong.certificate {
                let _ = write!(line, " certificate={cert}");
            }
            let _ = writeln!(out, "{line}");
            if !strong.certificates.is_empty() {
                let _ = writeln!(out, "certificates={}", strong.certificates.join(","));
            }
        }
        if let Some(weak) = &self.weak {
            let alphas: Vec<String> = weak.alphas.iter().map(f64::to_string).collect();
            let _ = writeln!(out, "weak={} weak_alphas={}", weak.holds, alphas.join(","));
        }
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed={seed}");
        }
        let _ = writeln!(out, "elapsed_ms={}", self.elapsed_ms);
        out
    }
}

/// Output record of `szw random` without `--analyze`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomRecord {
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub edges: Vec<(u32, u32)>,
}
