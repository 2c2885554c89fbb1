//! Runtime limits and reporting options shared by constructors, analysis,
//! and the claim runner.

use serde::{Deserialize, Serialize};

/// Output format for CLI commands and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

/// Caps and knobs. Every cap is configurable; the defaults keep desk-scale
/// sweeps (units, quasinilpotents, radical) well under a minute per ring.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Config {
    /// Largest ring that may be backed by dense operation tables.
    pub table_cap: usize,
    /// Largest ring constructible with a structure (encoding-based) backend.
    pub structure_cap: usize,
    /// Largest ring for which the lower nilradical chain is computed.
    pub nstar_cap: usize,
    /// Rings up to this size get exhaustive axiom verification; larger rings
    /// get randomized spot checks driven by `seed`.
    pub axiom_cap: usize,
    /// Number of random triples used by the spot-check tier.
    pub axiom_samples: usize,
    /// Seed for every randomized check; logged in reports.
    pub seed: u64,
    pub format: OutputFormat,
    /// Evaluate claim cells in parallel (profiles are still one-per-ring).
    pub parallel: bool,
    /// Check the literal idempotent-disjointness statement instead of the
    /// nonzero-idempotent variant.
    pub literal: bool,
    /// Include per-cell wall-clock millis in reports. Off by default so that
    /// two runs with the same seed serialize byte-identically.
    pub timings: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            table_cap: 4096,
            structure_cap: 65536,
            nstar_cap: 1024,
            axiom_cap: 256,
            axiom_samples: 100_000,
            seed: 0,
            format: OutputFormat::Text,
            parallel: true,
            literal: false,
            timings: false,
        }
    }
}

impl Config {
    pub fn with_seed(seed: u64) -> Self {
        Config {
            seed,
            ..Config::default()
        }
    }
}
