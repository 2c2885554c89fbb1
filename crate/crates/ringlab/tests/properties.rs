//! Property tests over randomly generated rings and expressions.

use proptest::prelude::*;

use ringlab::analysis;
use ringlab::config::Config;
use ringlab::construct::{product, zmod};
use ringlab::expr::{GroupExpr, RingExpr};
use ringlab::{FiniteRing, RingError, Subset};

fn cfg() -> Config {
    Config::default()
}

/// A pool of small mixed rings for invariant sweeps, built once: profiles
/// are memoized on the ring handles, so reuse matters.
fn pool() -> &'static [FiniteRing] {
    static POOL: std::sync::OnceLock<Vec<FiniteRing>> = std::sync::OnceLock::new();
    POOL.get_or_init(build_pool)
}

fn build_pool() -> Vec<FiniteRing> {
    let c = cfg();
    let f2 = zmod(2, &c).unwrap();
    let z4 = zmod(4, &c).unwrap();
    vec![
        zmod(5, &c).unwrap(),
        zmod(6, &c).unwrap(),
        zmod(8, &c).unwrap(),
        zmod(9, &c).unwrap(),
        product(&[f2.clone(), z4.clone()], &c).unwrap(),
        ringlab::construct::upper_triangular(2, &z4, &c).unwrap(),
        ringlab::construct::matrix_ring(2, &f2, &c).unwrap(),
        ringlab::construct::group_ring(&f2, &ringlab::construct::cyclic(3).unwrap(), &c).unwrap(),
        ringlab::construct::b_ring(2, 2, &z4, &c).unwrap(),
        ringlab::construct::c_ring(3, &f2, &c).unwrap(),
    ]
}

proptest! {
    /// A single corrupted multiplication entry in a modular ring always
    /// breaks some axiom: bilinearity forces the whole table.
    #[test]
    fn corrupted_zmod_tables_are_rejected(
        n in 2usize..9,
        a in 0usize..9,
        b in 0usize..9,
        delta in 1usize..9,
    ) {
        let (a, b) = (a % n, b % n);
        let wrong = (a * b + delta.clamp(1, n - 1)) % n;
        prop_assume!(wrong != (a * b) % n);
        let result = ringlab::FiniteRing::make_ring(
            n,
            |x, y| (x + y) % n,
            move |x, y| if (x, y) == (a, b) { wrong } else { (x * y) % n },
            0,
            1,
            "corrupted",
            &cfg(),
        );
        match result {
            Err(RingError::AxiomViolation { .. }) => {}
            Err(other) => prop_assert!(false, "unexpected error {other}"),
            Ok(_) => prop_assert!(false, "corruption was accepted"),
        }
    }

    /// Commutants contain 0, 1, and all powers; the center is the
    /// intersection of the commutants.
    #[test]
    fn commutant_and_center_relations(ring_idx in 0usize..10, elem in 0usize..4096usize) {
        let rings = pool();
        let ring = &rings[ring_idx % rings.len()];
        let a = elem % ring.size();
        let commutant = ring.commutant(a);
        prop_assert!(commutant.contains(ring.zero()));
        prop_assert!(commutant.contains(ring.one()));
        let mut p = a;
        for _ in 0..8 {
            prop_assert!(commutant.contains(p));
            p = ring.mul(p, a);
        }
        prop_assert!(ring.center().is_subset_of(&commutant));
    }

    /// Structural containments hold in every pool ring.
    #[test]
    fn subset_containments(ring_idx in 0usize..10) {
        let rings = pool();
        let ring = &rings[ring_idx % rings.len()];
        let p = analysis::profile(ring, &cfg());
        prop_assert!(p.nilpotents.is_subset_of(&p.quasinilpotents));
        prop_assert!(p.jacobson.is_subset_of(&p.quasinilpotents));
        prop_assert!(p.quasinilpotents.is_disjoint_from(&p.units.set));
        let mut nonzero_idem = p.idempotents.clone();
        nonzero_idem.remove(ring.zero());
        prop_assert!(p.quasinilpotents.is_disjoint_from(&nonzero_idem));
        // finite rings are Dedekind finite; the flag is a sanity anchor
        prop_assert!(p.flags.is_dedekind_finite);
    }
}

fn arb_group_expr() -> impl Strategy<Value = GroupExpr> {
    let leaf = prop_oneof![
        (1u64..6).prop_map(GroupExpr::Cyclic),
        Just(GroupExpr::D4),
        Just(GroupExpr::Q8),
    ];
    leaf.prop_recursive(2, 4, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| GroupExpr::Prod(Box::new(a), Box::new(b)))
    })
}

fn arb_ring_expr() -> impl Strategy<Value = RingExpr> {
    let leaf = prop_oneof![Just(RingExpr::F2), (2u64..17).prop_map(RingExpr::Zmod)];
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            (1u32..4, inner.clone()).prop_map(|(n, r)| RingExpr::Matrix(n, Box::new(r))),
            (1u32..5, inner.clone()).prop_map(|(n, r)| RingExpr::UpperTriangular(n, Box::new(r))),
            prop::collection::vec(inner.clone(), 1..4).prop_map(RingExpr::Product),
            inner.clone().prop_map(|r| RingExpr::TrivExt(Box::new(r))),
            (inner.clone(), 1u32..5).prop_map(|(r, n)| RingExpr::PolyQ(Box::new(r), n)),
            (inner.clone(), arb_group_expr())
                .prop_map(|(r, g)| RingExpr::GroupRing(Box::new(r), g)),
            (inner.clone(), 0u64..20).prop_map(|(r, e)| RingExpr::Corner(Box::new(r), e)),
            (inner.clone(), prop::collection::vec(0u64..16, 1..3))
                .prop_map(|(r, gens)| RingExpr::Quot(Box::new(r), gens)),
            (2u32..4, 2u32..4, inner.clone()).prop_map(|(n, m, r)| RingExpr::APair(
                n,
                m,
                Box::new(r)
            )),
            (2u32..4, 2u32..4, inner.clone()).prop_map(|(n, m, r)| RingExpr::BPair(
                n,
                m,
                Box::new(r)
            )),
            (2u32..5, inner.clone()).prop_map(|(n, r)| RingExpr::CAlt(n, Box::new(r))),
            (2u32..4, 2u32..4, inner.clone()).prop_map(|(n, m, r)| RingExpr::SGrid(
                n,
                m,
                Box::new(r)
            )),
            (2u32..4, 2u32..4, inner.clone()).prop_map(|(n, m, r)| RingExpr::TPair(
                n,
                m,
                Box::new(r)
            )),
            (2u32..5, inner).prop_map(|(n, r)| RingExpr::UAlt(n, Box::new(r))),
        ]
    })
}

proptest! {
    /// parse . print is the identity on syntax trees.
    #[test]
    fn print_parse_round_trip(expr in arb_ring_expr()) {
        let printed = ringlab::expr::print(&expr);
        let reparsed = ringlab::expr::parse(&printed).expect("printed form parses");
        prop_assert_eq!(expr, reparsed);
    }

    /// Evaluation of arbitrary well-formed expressions never panics; under
    /// tiny caps it either builds a verified ring or errors.
    #[test]
    fn eval_is_total(expr in arb_ring_expr()) {
        let config = Config {
            table_cap: 256,
            structure_cap: 512,
            axiom_cap: 64,
            axiom_samples: 64,
            ..Config::default()
        };
        if let Ok(ring) = ringlab::expr::eval(&expr, &config) {
            prop_assert!(ring.size() >= 2);
            prop_assert!(ring.size() <= 512);
        }
    }
}

#[test]
fn lower_nilradical_matches_radical_on_the_pool() {
    // in a finite ring the radical is nilpotent and the semisimple quotient
    // has no nonzero nilpotent ideals, so the chain recovers exactly it
    for ring in pool() {
        let p = analysis::profile(&ring, &cfg());
        let nstar = p.lower_nilradical.as_ref().expect("pool rings are small");
        assert_eq!(nstar, &p.jacobson, "ring {}", ring.label());
    }
}

#[test]
fn materialized_pool_rings_agree_with_their_structures() {
    for ring in pool() {
        if ring.size() > 512 {
            continue;
        }
        let dense = ring.materialize(4096).unwrap();
        for a in 0..ring.size() {
            for b in 0..ring.size() {
                assert_eq!(ring.add(a, b), dense.add(a, b));
                assert_eq!(ring.mul(a, b), dense.mul(a, b));
            }
        }
    }
}

#[test]
fn product_law_for_all_named_subsets() {
    let c = cfg();
    let z4 = zmod(4, &c).unwrap();
    let z6 = zmod(6, &c).unwrap();
    let factors = [z4.clone(), z6.clone()];
    let p = product(&factors, &c).unwrap();
    let pp = analysis::profile(&p, &c);
    let fp: Vec<_> = factors.iter().map(|f| analysis::profile(f, &c)).collect();
    let pick = |profile: &std::sync::Arc<analysis::RingProfile>, which: usize| -> Subset {
        match which {
            0 => profile.units.set.clone(),
            1 => profile.idempotents.clone(),
            2 => profile.nilpotents.clone(),
            3 => profile.jacobson.clone(),
            _ => profile.quasinilpotents.clone(),
        }
    };
    for which in 0..5 {
        let whole = pick(&pp, which);
        for idx in 0..p.size() {
            let parts = ringlab::construct::base::product_components(&factors, idx);
            let componentwise = parts
                .iter()
                .zip(fp.iter())
                .all(|(&d, f)| pick(f, which).contains(d));
            assert_eq!(
                whole.contains(idx),
                componentwise,
                "subset {which} at {idx}"
            );
        }
    }
}

#[test]
fn profiles_are_isomorphism_invariant() {
    // pairs built along different encodings but isomorphic as rings must
    // agree on every classifier flag and on all subset cardinalities
    let c = cfg();
    let f2 = zmod(2, &c).unwrap();
    let pairs: Vec<(FiniteRing, FiniteRing)> = vec![
        (
            ringlab::construct::trivial_extension_regular(&f2, &c).unwrap(),
            ringlab::construct::poly_quotient(&f2, 2, &c).unwrap(),
        ),
        (
            ringlab::construct::formal_triangular(
                &f2,
                &f2,
                &ringlab::construct::Bimodule::regular(&f2),
                &c,
            )
            .unwrap(),
            ringlab::construct::upper_triangular(2, &f2, &c).unwrap(),
        ),
        (
            ringlab::construct::matrix_ring(1, &zmod(6, &c).unwrap(), &c).unwrap(),
            zmod(6, &c).unwrap(),
        ),
    ];
    for (left, right) in &pairs {
        assert!(
            ringlab::construct::brute_force_isomorphic(left, right, &c)
                .unwrap()
                .is_some(),
            "{} vs {}",
            left.label(),
            right.label()
        );
        let lp = analysis::profile(left, &c);
        let rp = analysis::profile(right, &c);
        assert_eq!(lp.flags, rp.flags, "{} vs {}", left.label(), right.label());
        assert_eq!(lp.units.set.card(), rp.units.set.card());
        assert_eq!(lp.idempotents.card(), rp.idempotents.card());
        assert_eq!(lp.nilpotents.card(), rp.nilpotents.card());
        assert_eq!(lp.jacobson.card(), rp.jacobson.card());
        assert_eq!(lp.quasinilpotents.card(), rp.quasinilpotents.card());
        assert_eq!(lp.center.card(), rp.center.card());
    }
}

#[test]
fn quasinilpotents_are_conjugation_invariant() {
    let c = cfg();
    let f2 = zmod(2, &c).unwrap();
    let rings = [
        ringlab::construct::matrix_ring(2, &f2, &c).unwrap(),
        ringlab::construct::upper_triangular(2, &zmod(4, &c).unwrap(), &c).unwrap(),
    ];
    for ring in &rings {
        let p = analysis::profile(ring, &c);
        for u in p.units.set.iter() {
            let inv = p.inverse(u).unwrap();
            for a in 0..ring.size() {
                let conj = ring.mul(ring.mul(u, a), inv);
                assert_eq!(
                    p.quasinilpotents.contains(a),
                    p.quasinilpotents.contains(conj),
                    "{}: conjugation by unit {u} moved {a} across the boundary",
                    ring.label()
                );
            }
        }
    }
}

#[test]
fn the_radical_is_a_two_sided_ideal() {
    let c = cfg();
    for ring in pool() {
        let p = analysis::profile(ring, &c);
        ringlab::construct::ideal::verify_ideal(ring, &p.jacobson)
            .unwrap_or_else(|e| panic!("{}: {e}", ring.label()));
    }
}
