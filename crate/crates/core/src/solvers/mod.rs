//! Exact solvers for the stability number, maximum stable sets and matchings.
//!
//! Everything here is exact and single-threaded. Inputs beyond the configured
//! [`Limits`] are refused with [`Error::Capacity`](crate::Error::Capacity)
//! rather than answered approximately.

mod matching;
mod stable;

pub use matching::{
    all_maximum_matchings, forced_matching_edges, matching_report, maximum_matching,
    maximum_matching_bruteforce, maximum_matchings_intersection, perfect_matching_status,
    MatchingReport, MaximumMatching, PerfectMatchingCount, PerfectMatchingStatus,
};
pub use stable::{
    enumerate_maximum_stable_sets, lex_smallest_maximum_stable_set, maximum_stable_set,
    stability_number, StableSetReport,
};

use serde::Serialize;

/// Size caps for the exponential parts of the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest `n` accepted by the branch-and-bound stability solver (hard ceiling 64).
    pub alpha_max_n: usize,
    /// Largest `n` for which all maximum stable sets are enumerated.
    pub omega_max_n: usize,
    /// Most maximum stable sets an enumeration may produce.
    pub omega_cap: usize,
    /// Largest `n` for the exhaustive matching oracle.
    pub bruteforce_max_n: usize,
    /// Largest `n` for which maximum matchings are enumerated as a cross-check.
    pub matching_enum_max_n: usize,
    /// Largest `n` for exhaustive odd-cycle search.
    pub odd_cycle_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            alpha_max_n: 40,
            omega_max_n: 20,
            omega_cap: 100_000,
            bruteforce_max_n: 12,
            matching_enum_max_n: 20,
            odd_cycle_max_n: 14,
        }
    }
}
