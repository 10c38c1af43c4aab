//! Variable Wiener and Szeged indices for connected graphs.
//!
//! For a connected graph the library computes the two term multisets behind
//! the classical Wiener and Szeged indices — the pairwise distances `d_i`
//! and the per-edge closer-vertex products `n_i` — and evaluates the
//! parameterized sums `W^α = Σ d_i^α` and `Sz^α = Σ n_i^α` together with the
//! gap `h(α) = Sz^α − W^α` and its derivative.
//!
//! On top of the evaluators it provides:
//!
//! * root location for `h` on a positive interval ([`critical`]), with
//!   per-graph verdicts on whether the crossing exponent is unique;
//! * majorization machinery and the sufficient uniqueness certificates
//!   ([`majorization`]);
//! * the `G_{k,ℓ}` construction (clique minus a Hamiltonian cycle, joined to
//!   a pendant path) whose gap function can have three zeros, plus a grid
//!   search for such multi-root instances ([`gkl`]);
//! * seeded random connected graphs for empirical sweeps ([`randgen`]).
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `szw-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod critical;
pub mod gkl;
pub mod graph;
pub mod invariants;
pub mod majorization;
mod math;
pub mod randgen;

pub use critical::{
    find_roots, strong_conjecture_verdict, weak_conjecture_check, CriticalError, Root,
    RootReport, ScanParams, StrongVerdict,
};
pub use gkl::GklParams;
pub use graph::{DistanceMatrix, Graph, GraphError};
pub use invariants::{GapFunction, IndexProfile};
pub use majorization::{majorizes, Certificate, CertificateKind, SequenceError};
pub use randgen::SplitMix64;
