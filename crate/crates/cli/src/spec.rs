//! Colon-separated value specs for scan windows and search ranges.

use std::str::FromStr;
use szw_core::critical::ScanParams;

/// `lo:hi:step` scan window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanSpec {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl ScanSpec {
    /// Scan parameters with the default bisection width.
    pub fn to_params(self) -> ScanParams {
        ScanParams { lo: self.lo, hi: self.hi, step: self.step, ..ScanParams::default() }
    }
}

impl FromStr for ScanSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected lo:hi:step, got '{s}'"));
        }
        let parse = |t: &str| t.parse::<f64>().map_err(|_| format!("bad number '{t}' in '{s}'"));
        Ok(ScanSpec { lo: parse(parts[0])?, hi: parse(parts[1])?, step: parse(parts[2])? })
    }
}

/// Inclusive `lo:hi` integer range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeSpec {
    pub lo: u32,
    pub hi: u32,
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 2 {
            return Err(format!("expected lo:hi, got '{s}'"));
        }
        let parse = |t: &str| t.parse::<u32>().map_err(|_| format!("bad integer '{t}' in '{s}'"));
        Ok(RangeSpec { lo: parse(parts[0])?, hi: parse(parts[1])? })
    }
}
