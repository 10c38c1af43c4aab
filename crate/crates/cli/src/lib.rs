//! Record schema and argument parsing shared by the `szw` binary and its
//! integration tests. The binary's human output is line-oriented
//! `key=value`; `--json` emits one [`record::AnalysisRecord`] per analysis.

pub mod record;
pub mod spec;
