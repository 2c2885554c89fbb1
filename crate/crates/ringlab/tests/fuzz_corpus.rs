//! Replay the checked-in fuzz corpus seeds through the same entry points the
//! fuzz targets drive, so the seeds stay green in ordinary test runs.

use ringlab::config::Config;

fn corpus_dir(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(name)
}

fn seeds(name: &str) -> Vec<(String, Vec<u8>)> {
    let dir = corpus_dir(name);
    let mut out = Vec::new();
    for entry in std::fs::read_dir(&dir).unwrap_or_else(|e| panic!("{dir:?}: {e}")) {
        let path = entry.unwrap().path();
        if path.is_file() {
            out.push((
                path.file_name().unwrap().to_string_lossy().to_string(),
                std::fs::read(&path).unwrap(),
            ));
        }
    }
    out.sort();
    assert!(!out.is_empty(), "no seeds in {dir:?}");
    out
}

#[test]
fn parse_expr_seeds_never_panic_and_round_trip() {
    for (name, bytes) in seeds("parse_expr") {
        let Ok(input) = std::str::from_utf8(&bytes) else {
            continue;
        };
        if let Ok(expr) = ringlab::expr::parse(input) {
            let printed = ringlab::expr::print(&expr);
            let reparsed = ringlab::expr::parse(&printed)
                .unwrap_or_else(|e| panic!("seed {name}: printed form fails to parse: {e}"));
            assert_eq!(expr, reparsed, "seed {name}");
        }
    }
}

#[test]
fn eval_expr_seeds_construct_or_fail_cleanly() {
    let config = Config {
        table_cap: 256,
        structure_cap: 512,
        axiom_cap: 64,
        axiom_samples: 64,
        ..Config::default()
    };
    for (name, bytes) in seeds("eval_expr") {
        let Ok(input) = std::str::from_utf8(&bytes) else {
            continue;
        };
        if let Ok(ring) = ringlab::expr::parse_and_eval(input, &config) {
            assert!(ring.size() >= 2, "seed {name}");
            let one = ring.one();
            assert_eq!(ring.mul(one, one), one, "seed {name}");
        }
    }
}

#[test]
fn ring_json_seeds_import_or_fail_cleanly() {
    let config = Config {
        table_cap: 64,
        axiom_cap: 64,
        ..Config::default()
    };
    let mut accepted = 0;
    for (name, bytes) in seeds("ring_json") {
        let Ok(input) = std::str::from_utf8(&bytes) else {
            continue;
        };
        if let Ok(ring) = ringlab::json_ring::ring_from_json(input, &config) {
            accepted += 1;
            let one = ring.one();
            for a in 0..ring.size() {
                assert_eq!(ring.mul(one, a), a, "seed {name}");
            }
        }
    }
    assert!(accepted >= 2, "the well-formed seeds must import");
}
