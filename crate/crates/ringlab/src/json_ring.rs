//! JSON import for raw ring tables — the escape hatch for rings outside the
//! expression language.
//!
//! Format: `{"size": n, "add": [[...]], "mul": [[...]], "zero": z,
//! "one": o}` with `add` and `mul` as n x n row-major tables of indices.
//! Imports run the full axiom verification for their size tier, so malformed
//! or corrupted tables are rejected, never wrapped.

use serde::Deserialize;

use crate::config::Config;
use crate::ring::{FiniteRing, Result, RingError, RingMeta};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawRingTables {
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
    #[serde(default)]
    pub label: Option<String>,
}

/// Parse and validate a JSON ring description.
pub fn ring_from_json(text: &str, config: &Config) -> Result<FiniteRing> {
    let raw: RawRingTables =
        serde_json::from_str(text).map_err(|e| RingError::InvalidArgument(format!("json: {e}")))?;
    ring_from_tables(raw, config)
}

/// Validate an already-parsed table description.
pub fn ring_from_tables(raw: RawRingTables, config: &Config) -> Result<FiniteRing> {
    let n = raw.size;
    if n == 0 {
        return Err(RingError::InvalidArgument("size 0".into()));
    }
    if n == 1 {
        return Err(RingError::ZeroRing);
    }
    if n as u128 > config.table_cap as u128 {
        return Err(RingError::SizeCapExceeded {
            size: n as u128,
            cap: config.table_cap,
        });
    }
    if raw.add.len() != n || raw.mul.len() != n {
        return Err(RingError::InvalidArgument(
            "operation tables must have `size` rows".into(),
        ));
    }
    if raw.zero >= n || raw.one >= n {
        return Err(RingError::InvalidArgument(
            "zero/one index out of range".into(),
        ));
    }
    let mut add = vec![0u32; n * n];
    let mut mul = vec![0u32; n * n];
    for (t_in, t_out, name) in [(&raw.add, &mut add, "add"), (&raw.mul, &mut mul, "mul")] {
        for (i, row) in t_in.iter().enumerate() {
            if row.len() != n {
                return Err(RingError::InvalidArgument(format!(
                    "{name} row {i} must have `size` entries"
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(RingError::InvalidArgument(format!(
                        "{name}[{i}][{j}] = {v} out of range"
                    )));
                }
                t_out[i * n + j] = v as u32;
            }
        }
    }
    let label = raw.label.unwrap_or_else(|| format!("imported(size={n})"));
    FiniteRing::from_tables(
        n,
        add,
        mul,
        raw.zero,
        raw.one,
        label,
        RingMeta::Opaque,
        config,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    const Z4: &str = r#"{
        "size": 4,
        "add": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
        "mul": [[0,0,0,0],[0,1,2,3],[0,2,0,2],[0,3,2,1]],
        "zero": 0,
        "one": 1
    }"#;

    #[test]
    fn valid_tables_import() {
        let r = ring_from_json(Z4, &cfg()).unwrap();
        assert_eq!(r.size(), 4);
        assert_eq!(r.mul(3, 3), 1);
    }

    #[test]
    fn corrupted_tables_are_rejected_by_axiom_verification() {
        let bad = Z4.replace("[0,2,0,2]", "[0,2,1,2]");
        let err = ring_from_json(&bad, &cfg()).unwrap_err();
        assert!(matches!(err, RingError::AxiomViolation { .. }));
    }

    #[test]
    fn malformed_json_is_rejected() {
        assert!(ring_from_json("{", &cfg()).is_err());
        assert!(ring_from_json("{\"size\": 2}", &cfg()).is_err());
        let wrong_dims = Z4.replace("[0,1,2,3],", "[0,1,2],");
        assert!(ring_from_json(&wrong_dims, &cfg()).is_err());
        let out_of_range = Z4.replace("\"one\": 1", "\"one\": 9");
        assert!(ring_from_json(&out_of_range, &cfg()).is_err());
    }
}
