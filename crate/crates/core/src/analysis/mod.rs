//! Cryptanalysis of the schemes: sensitivity metrics, key domains,
//! known-plaintext brute force and identifiability, and the table rows that
//! combine them.
//!
//! Every sweep over a key domain runs in parallel but returns results in key
//! order, so output is identical to a sequential run.

mod attack;
mod domain;
mod identify;
mod metrics;
mod row;

pub use attack::{kpa_bruteforce, kpa_candidate_counts, minimal_singleton_prefix, KpaOutcome};
pub use domain::{enumerate_keys, key_domain, KeyDomain, KEY_SPACE_WIDTH};
pub use identify::{identifiability, IdentifiabilityReport, Verdict};
pub use metrics::{
    bit_difference_percent, hamming_bits, key_sensitivity, mean_plaintext_sensitivity,
    plaintext_sensitivity, FlipSpec,
};
pub use row::{analyze_row, analyze_row_with, AnalysisRow, Perturbation, RowOptions};
