//! Claim coverage for constructions outside the default corpus: formal
//! triangular rings (both mixed and matching bases) and general-bimodule
//! trivial extensions.

use ringlab::analysis::profile;
use ringlab::claims::{run_claims, CellStatus};
use ringlab::config::Config;
use ringlab::construct::{formal_triangular, trivial_extension, zmod, Bimodule};
use ringlab::FiniteRing;

fn cfg() -> Config {
    Config::default()
}

fn custom_corpus() -> Vec<FiniteRing> {
    let c = cfg();
    let f2 = zmod(2, &c).unwrap();
    let z4 = zmod(4, &c).unwrap();
    let z6 = zmod(6, &c).unwrap();
    vec![
        // UQ corners with the regular bimodule
        formal_triangular(&f2, &f2, &Bimodule::regular(&f2), &c).unwrap(),
        // mixed corners: one UQ and one not, zero bimodule
        formal_triangular(&z4, &z6, &Bimodule::zero_module(&z4, &z6), &c).unwrap(),
        // trivial extension by an explicit (non-regular) bimodule: the
        // additive group of Z/4 with both actions through multiplication
        {
            let add: Vec<u32> = (0..16).map(|i| ((i / 4 + i % 4) % 4) as u32).collect();
            let act: Vec<u32> = (0..16).map(|i| ((i / 4 * (i % 4)) % 4) as u32).collect();
            let module =
                Bimodule::from_tables(4, add, 0, &z4, &z4, act.clone(), act, "z4-as-module".into())
                    .unwrap();
            trivial_extension(&z4, &module, &c).unwrap()
        },
    ]
}

#[test]
fn formal_triangular_uq_transfer_goes_both_ways() {
    let c = cfg();
    let corpus = custom_corpus();
    let p0 = profile(&corpus[0], &c);
    assert!(p0.flags.is_uq, "both corners UQ");
    let p1 = profile(&corpus[1], &c);
    assert!(!p1.flags.is_uq, "one corner is not UQ");
}

#[test]
fn structured_claims_cover_formal_triangular_rings() {
    let c = cfg();
    let corpus = custom_corpus();
    let ids: Vec<String> = ["C07", "C08"].iter().map(|s| s.to_string()).collect();
    let report = run_claims(&corpus, Some(&ids), &c).unwrap();
    assert_eq!(report.unexpected_failures(), 0);
    // every cell is applicable here: all three rings are structured
    assert!(report
        .cells
        .iter()
        .all(|cell| cell.status == CellStatus::Pass));
}

#[test]
fn quasinilpotent_shape_of_a_formal_triangular_ring() {
    // direct check of the corner-coordinate description, independent of the
    // claim machinery: (r, n, s) is quasinilpotent exactly when r and s are
    // (both corners are UQ here)
    let c = cfg();
    let f2 = zmod(2, &c).unwrap();
    let ft = formal_triangular(&f2, &f2, &Bimodule::regular(&f2), &c).unwrap();
    let p = profile(&ft, &c);
    let pb = profile(&f2, &c);
    for idx in 0..ft.size() {
        let (r, _, s) = ringlab::construct::bimodule::formal_parts(2, 2, idx);
        let expected = pb.quasinilpotents.contains(r) && pb.quasinilpotents.contains(s);
        assert_eq!(p.quasinilpotents.contains(idx), expected, "element {idx}");
    }
}
