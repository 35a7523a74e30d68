//! Acceptance checks for the `fivepoint` library.
//!
//! Each criterion is a function returning a [`Report`]; randomized checks draw from a
//! seeded generator so every run is reproducible.

use std::fmt;

use serde::Serialize;

mod criteria;
pub mod oracle;
pub mod random;

pub use criteria::{
    catalogue_reproduction, closure_consistency, degeneration_endpoints, faithful_parameters, ideal_certificates,
    open_orbit_dimension, representative_round_trips, single_fibre_closures, splitting_agrees_with_search,
};

/// Seed used by [`run`] and [`run_all`].
pub const DEFAULT_SEED: u64 = 0x5eed_f1fe;

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub criterion: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Report {
    fn new(criterion: u8, name: &'static str, failures: &[String], summary: String) -> Self {
        let detail = match failures {
            [] => summary,
            [first, ..] => format!("{summary}; {} failure(s), first: {first}", failures.len()),
        };
        Report { criterion, name, passed: failures.is_empty(), detail }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} criterion {} ({}): {}", self.criterion, self.name, self.detail)
    }
}

/// Number of acceptance criteria.
pub const CRITERIA: u8 = 9;

/// Runs one criterion by number.
pub fn run(criterion: u8, seed: u64) -> Option<Report> {
    Some(match criterion {
        1 => catalogue_reproduction(),
        2 => splitting_agrees_with_search(seed),
        3 => representative_round_trips(),
        4 => faithful_parameters(seed),
        5 => ideal_certificates(seed),
        6 => closure_consistency(seed),
        7 => degeneration_endpoints(seed),
        8 => open_orbit_dimension(),
        9 => single_fibre_closures(seed),
        _ => return None,
    })
}

/// Runs every criterion in order.
pub fn run_all(seed: u64) -> Vec<Report> {
    (1..=CRITERIA).filter_map(|c| run(c, seed)).collect()
}
