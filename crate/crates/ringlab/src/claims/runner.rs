//! Execute the claim grid over a corpus and assemble the report.

use rayon::prelude::*;
use std::time::Instant;

use super::report::{Cell, CellStatus, ClaimEntry, ClaimReport, CorpusEntry, ReportConfig};
use super::{registry, CheckOutcome, Claim, ClaimContext, CostClass};
use crate::config::Config;
use crate::ring::{FiniteRing, Result, RingError};
use crate::util::fnv1a64;

/// Size limit for cubic-cost claims. Cheap claims always run; quadratic
/// claims run up to the table cap.
const CUBIC_SIZE_LIMIT: usize = 1024;

/// Look up a claim by id.
pub fn explain(id: &str) -> Result<&'static Claim> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| RingError::UnknownClaim(id.to_string()))
}

fn size_gate(claim: &Claim, ring: &FiniteRing, config: &Config) -> Option<String> {
    let n = ring.size();
    if n > config.table_cap {
        // no profile is computed at all for rings above the table cap
        return Some(format!(
            "size {n} above the table cap {}: profile not computed",
            config.table_cap
        ));
    }
    let limit = match claim.cost {
        CostClass::Cheap => usize::MAX,
        CostClass::Quadratic => config.table_cap,
        CostClass::Cubic => CUBIC_SIZE_LIMIT.min(config.table_cap),
    };
    (n > limit).then(|| format!("size {n} above the {:?} limit {limit}", claim.cost))
}

fn evaluate_cell(claim: &Claim, ring: &FiniteRing, config: &Config) -> Cell {
    let started = Instant::now();
    let (status, witness, reason) = match size_gate(claim, ring, config) {
        Some(reason) => (CellStatus::Skipped, None, Some(reason)),
        None => {
            let ctx = ClaimContext::new(ring, config);
            if !(claim.applies)(&ctx) {
                (CellStatus::Inapplicable, None, None)
            } else {
                match (claim.check)(&ctx) {
                    CheckOutcome::Pass => (CellStatus::Pass, None, None),
                    CheckOutcome::Fail(w) => (CellStatus::Fail, Some(w), None),
                    CheckOutcome::Flagged(w) => (CellStatus::Flagged, Some(w), None),
                }
            }
        }
    };
    Cell {
        claim: claim.id.to_string(),
        ring: ring.label().to_string(),
        status,
        witness,
        reason,
        millis: config.timings.then(|| started.elapsed().as_millis() as u64),
    }
}

/// Run the selected claims (all of them when `only` is None) over the corpus
/// and return the report. Profiles are computed once per ring before the
/// grid fans out; the grid itself is embarrassingly parallel and collected in
/// deterministic order.
pub fn run_claims(
    corpus: &[FiniteRing],
    only: Option<&[String]>,
    config: &Config,
) -> Result<ClaimReport> {
    // report cells are keyed by (claim id, ring label); ambiguous labels
    // would make them unreadable
    {
        let mut labels: Vec<&str> = corpus.iter().map(|r| r.label()).collect();
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(RingError::InvalidArgument(format!(
                "duplicate ring label {:?} in the corpus",
                w[0]
            )));
        }
    }
    let selected: Vec<&'static Claim> = match only {
        None => registry().iter().collect(),
        Some(ids) => {
            let mut v = Vec::with_capacity(ids.len());
            for id in ids {
                v.push(explain(id)?);
            }
            v
        }
    };

    // profiles first, in parallel when allowed; rings above the table cap
    // never get one (their cells are all skipped)
    let profiled: Vec<&FiniteRing> = corpus
        .iter()
        .filter(|r| r.size() <= config.table_cap)
        .collect();
    if config.parallel {
        profiled.par_iter().for_each(|ring| {
            crate::analysis::profile(ring, config);
        });
    } else {
        for ring in &profiled {
            crate::analysis::profile(ring, config);
        }
    }

    let grid: Vec<(usize, usize)> = (0..selected.len())
        .flat_map(|c| (0..corpus.len()).map(move |r| (c, r)))
        .collect();
    let cells: Vec<Cell> = if config.parallel {
        grid.par_iter()
            .map(|&(c, r)| evaluate_cell(selected[c], &corpus[r], config))
            .collect()
    } else {
        grid.iter()
            .map(|&(c, r)| evaluate_cell(selected[c], &corpus[r], config))
            .collect()
    };

    let mut digest_input = String::new();
    for ring in corpus {
        digest_input.push_str(ring.label());
        digest_input.push('|');
        digest_input.push_str(&ring.size().to_string());
        digest_input.push(';');
    }
    let corpus_digest = format!("{:016x}", fnv1a64(digest_input.as_bytes()));

    Ok(ClaimReport {
        config: ReportConfig {
            seed: config.seed,
            table_cap: config.table_cap,
            structure_cap: config.structure_cap,
            nstar_cap: config.nstar_cap,
            axiom_cap: config.axiom_cap,
            literal: config.literal,
        },
        corpus_digest,
        corpus: corpus
            .iter()
            .map(|r| CorpusEntry {
                label: r.label().to_string(),
                size: r.size(),
                backend: r.backend_kind().to_string(),
            })
            .collect(),
        claims: selected
            .iter()
            .map(|c| ClaimEntry {
                id: c.id.to_string(),
                title: c.title.to_string(),
                statement: c.statement.to_string(),
                applicability: c.applicability.to_string(),
                cost: c.cost,
                flag_site: c.flag_site,
            })
            .collect(),
        cells,
    })
}
