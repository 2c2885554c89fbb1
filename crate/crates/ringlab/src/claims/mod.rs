//! Executable algebraic claims and the corpus runner.
//!
//! Every claim is data: an applicability predicate over a ring's profile
//! plus a deterministic check that either passes or produces a witness.
//! Failures are report rows, not errors, so the runner doubles as a
//! falsification engine: a claim that fails somewhere shows up with a
//! reproducible witness instead of aborting the run.

mod corpus;
mod registry;
mod report;
mod runner;

pub use corpus::default_corpus;
pub use registry::{registry, Claim};
pub use report::{Cell, CellStatus, ClaimEntry, ClaimReport, CorpusEntry, ReportConfig};
pub use runner::{explain, run_claims};

use std::sync::Arc;

use crate::analysis::RingProfile;
use crate::config::Config;
use crate::ring::FiniteRing;

/// Everything a check may look at. Profiles of auxiliary rings (bases,
/// factors, quotients) are computed on demand through `analysis::profile`
/// and are memoized on their ring handles.
pub struct ClaimContext<'a> {
    pub ring: &'a FiniteRing,
    pub profile: Arc<RingProfile>,
    pub config: &'a Config,
}

impl<'a> ClaimContext<'a> {
    pub fn new(ring: &'a FiniteRing, config: &'a Config) -> Self {
        let profile = crate::analysis::profile(ring, config);
        ClaimContext {
            ring,
            profile,
            config,
        }
    }

    pub fn profile_of(&self, other: &FiniteRing) -> Arc<RingProfile> {
        crate::analysis::profile(other, self.config)
    }
}

/// Scheduling weight of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CostClass {
    Cheap,
    Quadratic,
    Cubic,
}

/// Result of one check on one ring.
#[derive(Debug, Clone)]
pub enum CheckOutcome {
    Pass,
    /// A genuine violation, with a minimal witness description.
    Fail(String),
    /// A violation at a documented expected-discrepancy site.
    Flagged(String),
}

impl CheckOutcome {
    pub fn fail_if(condition: bool, witness: impl FnOnce() -> String) -> CheckOutcome {
        if condition {
            CheckOutcome::Fail(witness())
        } else {
            CheckOutcome::Pass
        }
    }
}
