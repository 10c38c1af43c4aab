//! `szw` — variable Wiener/Szeged index analysis for connected graphs.

use clap::{Parser, Subcommand};
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;
use szw_cli::record::{AlphaRow, AnalysisRecord, RandomRecord, WeakRow};
use szw_cli::spec::{RangeSpec, ScanSpec};
use szw_core::critical::{find_roots, strong_conjecture_verdict, weak_conjecture_check};
use szw_core::gkl::{self, GklParams};
use szw_core::randgen::{random_gnm_connected, random_gnp_connected, RandError};
use szw_core::{Graph, IndexProfile};

/// Exponents used for the weak-conjecture check in `analyze`.
const WEAK_ALPHAS: [f64; 4] = [1.1, 1.5, 2.0, 3.0];

#[derive(Parser)]
#[command(name = "szw", version, about = "Variable Wiener/Szeged index analysis for connected graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical W/Sz and per-exponent index values for an edge-list file
    Index {
        path: PathBuf,
        /// Exponent to evaluate (repeatable)
        #[arg(long = "alpha", value_name = "A")]
        alphas: Vec<f64>,
        /// Emit one JSON record instead of key=value lines
        #[arg(long)]
        json: bool,
    },
    /// Gap-function root scan, conjecture verdicts, uniqueness certificates
    Analyze {
        /// Edge-list file (alternative to --gkl)
        path: Option<PathBuf>,
        /// Analyze the clique-minus-cycle family member G(K, ELL)
        #[arg(long, num_args = 2, value_names = ["K", "ELL"])]
        gkl: Option<Vec<u32>>,
        /// Scan window LO:HI:STEP (default 0.001:1.5:0.001)
        #[arg(long, value_name = "LO:HI:STEP")]
        scan: Option<ScanSpec>,
        #[arg(long)]
        json: bool,
    },
    /// CSV stream of h(alpha) on a grid, for external plotting
    Curve {
        /// Edge-list file (alternative to --gkl)
        path: Option<PathBuf>,
        /// Evaluate the closed forms of G(K, ELL) instead of a file
        #[arg(long, num_args = 2, value_names = ["K", "ELL"])]
        gkl: Option<Vec<u32>>,
        /// Grid LO:HI:STEP (default 0.001:1.5:0.001); rows at positive exponents
        #[arg(long, value_name = "LO:HI:STEP")]
        scan: Option<ScanSpec>,
    },
    /// Scan the G(k,l) grid for members whose gap has three or more roots
    Search {
        /// Inclusive k range, e.g. 500:540
        k_range: RangeSpec,
        /// Inclusive l range, e.g. 70:95
        ell_range: RangeSpec,
        /// Root-counting window LO:HI:STEP (default 0.001:1:0.001)
        #[arg(long, value_name = "LO:HI:STEP")]
        scan: Option<ScanSpec>,
    },
    /// Seeded random connected graph; prints an edge list unless --analyze
    Random {
        #[arg(long)]
        n: usize,
        /// Exact edge count (uniform G(n,m) conditioned on connectivity)
        #[arg(long)]
        m: Option<usize>,
        /// Edge probability (G(n,p) conditioned on connectivity)
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run the full analysis on the sample
        #[arg(long)]
        analyze: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
enum CliError {
    /// Bad input: file, parse, connectivity, parameters. Exit 2.
    Input(String),
    /// Complete graph in `analyze`: record printed, h identically zero. Exit 1.
    Degenerate,
    /// Rejection sampler exhausted its retry budget. Exit 3.
    RetryCap(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => f.write_str(msg),
            CliError::Degenerate => f.write_str("degenerate: h = 0 identically (complete graph)"),
            CliError::RetryCap(msg) => f.write_str(msg),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Degenerate => 1,
            CliError::RetryCap(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("szw: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Index { path, alphas, json } => cmd_index(&path, &alphas, json),
        Command::Analyze { path, gkl, scan, json } => cmd_analyze(path, gkl, scan, json),
        Command::Curve { path, gkl, scan } => cmd_curve(path, gkl, scan),
        Command::Search { k_range, ell_range, scan } => cmd_search(k_range, ell_range, scan),
        Command::Random { n, m, p, seed, analyze, json } => cmd_random(n, m, p, seed, analyze, json),
    }
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Graph::parse_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Exactly one of an edge-list path or family parameters.
fn resolve_graph(
    path: Option<PathBuf>,
    gkl: Option<Vec<u32>>,
) -> Result<(String, Graph), CliError> {
    match (path, gkl) {
        (Some(p), None) => {
            let g = load_graph(&p)?;
            Ok((p.display().to_string(), g))
        }
        (None, Some(kl)) => {
            let params =
                GklParams::new(kl[0], kl[1]).map_err(|e| CliError::Input(e.to_string()))?;
            Ok((format!("gkl({},{})", kl[0], kl[1]), params.build()))
        }
        _ => Err(CliError::Input("provide exactly one of <PATH> or --gkl K ELL".into())),
    }
}

fn connected_profile(g: &Graph) -> Result<IndexProfile, CliError> {
    IndexProfile::from_graph(g).map_err(|e| CliError::Input(e.to_string()))
}

fn emit(rec: &AnalysisRecord, json: bool) {
    if json {
        println!("{}", serde_json::to_string(rec).expect("record serializes"));
    } else {
        print!("{}", rec.to_kv());
    }
}

fn cmd_index(path: &Path, alphas: &[f64], json: bool) -> Result<(), CliError> {
    let g = load_graph(path)?;
    let started = Instant::now();
    let profile = connected_profile(&g)?;
    let mut rec = AnalysisRecord::from_profile(path.display().to_string(), &profile);
    for &alpha in alphas {
        let w_alpha = profile.wiener_alpha(alpha);
        let sz_alpha = profile.szeged_alpha(alpha);
        rec.alphas.push(AlphaRow { alpha, w_alpha, sz_alpha, h: sz_alpha - w_alpha });
    }
    rec.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    emit(&rec, json);
    Ok(())
}

fn analyze_profile(
    input: String,
    profile: &IndexProfile,
    scan: Option<ScanSpec>,
    seed: Option<u64>,
    json: bool,
    started: Instant,
) -> Result<(), CliError> {
    let mut rec = AnalysisRecord::from_profile(input, profile);
    rec.seed = seed;
    if profile.is_complete() {
        rec.degenerate = true;
        rec.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
        emit(&rec, json);
        return Err(CliError::Degenerate);
    }
    let params = scan.map(ScanSpec::to_params).unwrap_or_default();
    let report =
        find_roots(&profile.gap_fn(), &params).map_err(|e| CliError::Input(e.to_string()))?;
    let verdict = strong_conjecture_verdict(profile, &report);
    let weak = weak_conjecture_check(&profile.gap_fn(), &WEAK_ALPHAS)
        .expect("profile is non-complete and exponents exceed 1");
    rec.attach_report(&report);
    rec.attach_verdict(&verdict);
    rec.weak = Some(WeakRow { holds: weak, alphas: WEAK_ALPHAS.to_vec() });
    rec.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    emit(&rec, json);
    Ok(())
}

fn cmd_analyze(
    path: Option<PathBuf>,
    gkl: Option<Vec<u32>>,
    scan: Option<ScanSpec>,
    json: bool,
) -> Result<(), CliError> {
    let (input, g) = resolve_graph(path, gkl)?;
    let started = Instant::now();
    let profile = connected_profile(&g)?;
    analyze_profile(input, &profile, scan, None, json, started)
}

fn cmd_curve(
    path: Option<PathBuf>,
    gkl_args: Option<Vec<u32>>,
    scan: Option<ScanSpec>,
) -> Result<(), CliError> {
    let spec = scan.unwrap_or(ScanSpec { lo: 1e-3, hi: 1.5, step: 1e-3 });
    let valid = spec.step > 0.0
        && spec.step.is_finite()
        && spec.lo.is_finite()
        && spec.hi > spec.lo
        && (spec.hi - spec.lo) / spec.step <= 2e7;
    if !valid {
        return Err(CliError::Input(format!(
            "invalid curve grid lo={} hi={} step={}",
            spec.lo, spec.hi, spec.step
        )));
    }

    // two evaluation routes: profile-backed for files, closed forms for G(k,l)
    enum Eval {
        Profile(Box<IndexProfile>),
        Closed(GklParams),
    }
    let eval = match (path, gkl_args) {
        (Some(p), None) => Eval::Profile(Box::new(connected_profile(&load_graph(&p)?)?)),
        (None, Some(kl)) => Eval::Closed(
            GklParams::new(kl[0], kl[1]).map_err(|e| CliError::Input(e.to_string()))?,
        ),
        _ => return Err(CliError::Input("provide exactly one of <PATH> or --gkl K ELL".into())),
    };
    let h = |alpha: f64| match &eval {
        Eval::Profile(profile) => profile.gap(alpha),
        Eval::Closed(params) => params.gap_closed(alpha),
    };

    // grid rows at lo + i*step within [lo, hi], positive exponents only;
    // 17 significant digits so replotting is bit-faithful
    println!("alpha,h");
    let mut i = 0u64;
    loop {
        let alpha = spec.lo + i as f64 * spec.step;
        if alpha > spec.hi + spec.step * 1e-9 {
            break;
        }
        if alpha > 0.0 {
            println!("{alpha:.16e},{:.16e}", h(alpha));
        }
        i += 1;
    }
    Ok(())
}

fn cmd_search(
    k_range: RangeSpec,
    ell_range: RangeSpec,
    scan: Option<ScanSpec>,
) -> Result<(), CliError> {
    let params = scan.map(ScanSpec::to_params).unwrap_or_else(gkl::default_search_scan);
    let hits = gkl::search_multiroot(k_range.lo..=k_range.hi, ell_range.lo..=ell_range.hi, &params)
        .map_err(|e| CliError::Input(e.to_string()))?;
    for (cell, roots) in hits {
        println!("k={} ell={} roots={roots}", cell.k(), cell.ell());
    }
    Ok(())
}

fn cmd_random(
    n: usize,
    m: Option<usize>,
    p: Option<f64>,
    seed: u64,
    analyze: bool,
    json: bool,
) -> Result<(), CliError> {
    let (g, descriptor) = match (m, p) {
        (Some(m), None) => (random_gnm_connected(n, m, seed), format!("random(n={n},m={m},seed={seed})")),
        (None, Some(p)) => (random_gnp_connected(n, p, seed), format!("random(n={n},p={p},seed={seed})")),
        _ => return Err(CliError::Input("provide exactly one of --m or --p".into())),
    };
    let g = g.map_err(|e| match e {
        RandError::RetryCapExceeded { .. } => CliError::RetryCap(e.to_string()),
        other => CliError::Input(other.to_string()),
    })?;

    if analyze {
        let started = Instant::now();
        let profile = connected_profile(&g)?;
        return analyze_profile(descriptor, &profile, None, Some(seed), json, started);
    }

    if json {
        let rec = RandomRecord {
            n: g.vertex_count(),
            m: g.edge_count(),
            seed,
            edges: g.edges().to_vec(),
        };
        println!("{}", serde_json::to_string(&rec).expect("record serializes"));
    } else {
        // valid edge-list output, loadable by `index` and `analyze`
        println!("# random connected graph");
        println!("# n={} m={} seed={}", g.vertex_count(), g.edge_count(), seed);
        for &(u, v) in g.edges() {
            println!("{u} {v}");
        }
    }
    Ok(())
}
