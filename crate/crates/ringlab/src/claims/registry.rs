//! The claim registry: every statement the workbench checks, as data.
//!
//! Conventions used by the checks below, for a ring R with profile p:
//! U = units, Id = idempotents, N = nilpotents, J = Jacobson radical,
//! QN = quasinilpotents, Z = center. "UQ" / "UJ" / "UU" mean
//! U = 1 + QN / 1 + J / 1 + N respectively.

use super::{CheckOutcome, ClaimContext, CostClass};
use crate::analysis::{
    augmentation_ideal, element_predicates, geometric_sum_check, gs_drazin_inverse,
};
use crate::construct::base::product_components;
use crate::construct::families::{family_digits, family_len};
use crate::construct::matrix::{matrix_index, triangular_diagonal};
use crate::construct::{self, FamilyIsoKind};
use crate::ring::{FiniteRing, RingMeta, Subset};

pub struct Claim {
    pub id: &'static str,
    pub title: &'static str,
    pub statement: &'static str,
    pub applicability: &'static str,
    pub cost: CostClass,
    /// Documented expected-discrepancy site; failures report as flagged.
    pub flag_site: bool,
    pub(crate) applies: fn(&ClaimContext) -> bool,
    pub(crate) check: fn(&ClaimContext) -> CheckOutcome,
}

fn always(_: &ClaimContext) -> bool {
    true
}

fn when_uq(ctx: &ClaimContext) -> bool {
    ctx.profile.flags.is_uq
}

fn subset_eq(a: &Subset, b: &Subset) -> bool {
    a == b
}

// --- C01 -------------------------------------------------------------------

fn c01_check(ctx: &ClaimContext) -> CheckOutcome {
    let p = &ctx.profile;
    for a in p.nilpotents.iter() {
        if !p.quasinilpotents.contains(a) {
            return CheckOutcome::Fail(format!("nilpotent {a} is not quasinilpotent"));
        }
    }
    for a in p.jacobson.iter() {
        if !p.quasinilpotents.contains(a) {
            return CheckOutcome::Fail(format!("radical element {a} is not quasinilpotent"));
        }
    }
    CheckOutcome::Pass
}

// --- C02 -------------------------------------------------------------------

fn c02_check(ctx: &ClaimContext) -> CheckOutcome {
    let p = &ctx.profile;
    let zero = ctx.ring.zero();
    for a in p.quasinilpotents.iter() {
        if p.units.set.contains(a) {
            return CheckOutcome::Fail(format!("{a} is both a unit and quasinilpotent"));
        }
        if p.idempotents.contains(a) {
            if a == zero {
                if ctx.config.literal {
                    return CheckOutcome::Flagged(
                        "0 is idempotent and quasinilpotent, so the literal disjointness \
                         statement fails at the zero idempotent"
                            .to_string(),
                    );
                }
                continue;
            }
            return CheckOutcome::Fail(format!("{a} is a nonzero idempotent and quasinilpotent"));
        }
    }
    CheckOutcome::Pass
}

// --- C03 / C04: products ----------------------------------------------------

fn is_product(ctx: &ClaimContext) -> bool {
    matches!(ctx.ring.meta(), RingMeta::Product { .. })
}

fn c03_check(ctx: &ClaimContext) -> CheckOutcome {
    let RingMeta::Product { factors } = ctx.ring.meta() else {
        unreachable!("applicability gate");
    };
    let factor_profiles: Vec<_> = factors.iter().map(|f| ctx.profile_of(f)).collect();
    for idx in 0..ctx.ring.size() {
        let parts = product_components(factors, idx);
        let componentwise = parts
            .iter()
            .zip(factor_profiles.iter())
            .all(|(&d, fp)| fp.quasinilpotents.contains(d));
        if componentwise != ctx.profile.quasinilpotents.contains(idx) {
            return CheckOutcome::Fail(format!(
                "element {idx}: componentwise quasinilpotence {componentwise} but membership {}",
                ctx.profile.quasinilpotents.contains(idx)
            ));
        }
    }
    CheckOutcome::Pass
}

fn c04_check(ctx: &ClaimContext) -> CheckOutcome {
    let RingMeta::Product { factors } = ctx.ring.meta() else {
        unreachable!("applicability gate");
    };
    let each = factors.iter().all(|f| ctx.profile_of(f).flags.is_uq);
    CheckOutcome::fail_if(each != ctx.profile.flags.is_uq, || {
        format!(
            "product UQ flag {} but factors give {each}",
            ctx.profile.flags.is_uq
        )
    })
}

// --- C05: corners ------------------------------------------------------------

const CORNERS_PER_RING: usize = 32;

fn has_nontrivial_idempotent(ctx: &ClaimContext) -> bool {
    ctx.profile.idempotents.card() > 2
}

fn c05_check(ctx: &ClaimContext) -> CheckOutcome {
    let ring = ctx.ring;
    let p = &ctx.profile;
    let mut examined = 0usize;
    for e in p.idempotents.iter() {
        if e == ring.zero() || e == ring.one() {
            continue;
        }
        if examined == CORNERS_PER_RING {
            break;
        }
        examined += 1;
        let (corner, embedding) = match construct::corner(ring, e, ctx.config) {
            Ok(v) => v,
            Err(err) => return CheckOutcome::Fail(format!("corner at {e}: {err}")),
        };
        let cp = ctx.profile_of(&corner);
        // QN of the corner = QN of the ambient ring restricted to it
        for a in 0..corner.size() {
            let inner = cp.quasinilpotents.contains(a);
            let outer = p.quasinilpotents.contains(embedding.image_of(a));
            if inner != outer {
                return CheckOutcome::Fail(format!(
                    "corner at {e}: element {a} quasinilpotent inside={inner} outside={outer}"
                ));
            }
        }
        if p.flags.is_uq && !cp.flags.is_uq {
            return CheckOutcome::Fail(format!("corner at idempotent {e} is not UQ"));
        }
    }
    CheckOutcome::Pass
}

// --- C06: good subrings -------------------------------------------------------

fn has_canonical_embedding(ctx: &ClaimContext) -> bool {
    matches!(
        ctx.ring.meta(),
        RingMeta::GroupRing { .. }
            | RingMeta::TrivialExtension { .. }
            | RingMeta::UpperTriangular { .. }
            | RingMeta::PolyQuotient { .. }
            | RingMeta::PolyPair { .. }
            | RingMeta::FreePair { .. }
            | RingMeta::Alternating { .. }
    )
}

fn check_good_pair(
    ctx: &ClaimContext,
    embedding: &construct::RingEmbedding,
    sup: &FiniteRing,
    what: &str,
) -> CheckOutcome {
    match construct::is_good_subring(embedding) {
        Ok(true) => {}
        Ok(false) => return CheckOutcome::Fail(format!("{what}: embedding is not good")),
        Err(e) => return CheckOutcome::Fail(format!("{what}: {e}")),
    }
    let sub_profile = ctx.profile_of(embedding.sub());
    let sup_profile = ctx.profile_of(sup);
    for a in 0..embedding.sub().size() {
        if sup_profile.quasinilpotents.contains(embedding.image_of(a))
            && !sub_profile.quasinilpotents.contains(a)
        {
            return CheckOutcome::Fail(format!(
                "{what}: {a} is quasinilpotent in the ambient ring but not in the subring"
            ));
        }
    }
    if sup_profile.flags.is_uq && !sub_profile.flags.is_uq {
        return CheckOutcome::Fail(format!("{what}: ambient ring is UQ but the subring is not"));
    }
    CheckOutcome::Pass
}

fn c06_check(ctx: &ClaimContext) -> CheckOutcome {
    let ring = ctx.ring;
    let embedding = match ring.meta() {
        RingMeta::TrivialExtension { .. } => construct::embed::trivext_base_embedding(ring),
        RingMeta::UpperTriangular { .. } => construct::embed::triangular_scalar_embedding(ring),
        _ => construct::embed::constant_embedding(ring),
    };
    let embedding = match embedding {
        Ok(e) => e,
        Err(e) => return CheckOutcome::Fail(format!("canonical embedding: {e}")),
    };
    let outcome = check_good_pair(ctx, &embedding, ring, "base embedding");
    if !matches!(outcome, CheckOutcome::Pass) {
        return outcome;
    }
    // banded copy of a truncated polynomial ring inside the triangular ring
    if matches!(ring.meta(), RingMeta::PolyQuotient { .. }) {
        let (banded, tri) = match construct::embed::poly_banded_embedding(ring, ctx.config) {
            Ok(v) => v,
            Err(e) => return CheckOutcome::Fail(format!("banded embedding: {e}")),
        };
        let tri = match tri.materialize(ctx.config.table_cap) {
            Ok(t) => t,
            Err(_) => tri,
        };
        let outcome = check_good_pair(ctx, &banded, &tri, "banded embedding");
        if !matches!(outcome, CheckOutcome::Pass) {
            return outcome;
        }
    }
    CheckOutcome::Pass
}

// --- C07 / C08: structured shapes and transfer --------------------------------

fn is_structured(ctx: &ClaimContext) -> bool {
    matches!(
        ctx.ring.meta(),
        RingMeta::TrivialExtension { .. }
            | RingMeta::FormalTriangular { .. }
            | RingMeta::UpperTriangular { .. }
            | RingMeta::PolyQuotient { .. }
    )
}

/// The shape subset of a structured ring: elements whose distinguished
/// coordinates are quasinilpotent in the base ring(s).
fn shape_mask(ctx: &ClaimContext) -> (Subset, bool) {
    let ring = ctx.ring;
    match ring.meta() {
        RingMeta::TrivialExtension { base, module_size } => {
            let bp = ctx.profile_of(base);
            let mask = Subset::collect(ring, |idx| {
                let (r, _) = crate::construct::bimodule::trivext_parts(*module_size, idx);
                bp.quasinilpotents.contains(r)
            });
            (mask, bp.flags.is_uq)
        }
        RingMeta::FormalTriangular {
            left,
            right,
            module_size,
        } => {
            let lp = ctx.profile_of(left);
            let rp = ctx.profile_of(right);
            let mask = Subset::collect(ring, |idx| {
                let (r, _, s) =
                    crate::construct::bimodule::formal_parts(*module_size, right.size(), idx);
                lp.quasinilpotents.contains(r) && rp.quasinilpotents.contains(s)
            });
            (mask, lp.flags.is_uq && rp.flags.is_uq)
        }
        RingMeta::UpperTriangular { base, n } => {
            let bp = ctx.profile_of(base);
            let mask = Subset::collect(ring, |idx| {
                triangular_diagonal(base, *n, idx)
                    .into_iter()
                    .all(|d| bp.quasinilpotents.contains(d))
            });
            (mask, bp.flags.is_uq)
        }
        RingMeta::PolyQuotient { base, degree } => {
            let bp = ctx.profile_of(base);
            let mask = Subset::collect(ring, |idx| {
                let c0 = crate::construct::poly::poly_coefficients(base, *degree, idx)[0];
                bp.quasinilpotents.contains(c0)
            });
            (mask, bp.flags.is_uq)
        }
        _ => unreachable!("applicability gate"),
    }
}

fn c07_check(ctx: &ClaimContext) -> CheckOutcome {
    let (mask, bases_uq) = shape_mask(ctx);
    if !mask.is_subset_of(&ctx.profile.quasinilpotents) {
        let witness = mask
            .iter()
            .find(|&a| !ctx.profile.quasinilpotents.contains(a))
            .unwrap();
        return CheckOutcome::Fail(format!(
            "element {witness} has the quasinilpotent shape but is not quasinilpotent"
        ));
    }
    if bases_uq && !subset_eq(&mask, &ctx.profile.quasinilpotents) {
        let witness = ctx
            .profile
            .quasinilpotents
            .iter()
            .find(|&a| !mask.contains(a))
            .unwrap();
        return CheckOutcome::Fail(format!(
            "base rings are UQ but quasinilpotent {witness} escapes the shape"
        ));
    }
    CheckOutcome::Pass
}

fn c08_check(ctx: &ClaimContext) -> CheckOutcome {
    let expected = match ctx.ring.meta() {
        RingMeta::TrivialExtension { base, .. }
        | RingMeta::UpperTriangular { base, .. }
        | RingMeta::PolyQuotient { base, .. } => ctx.profile_of(base).flags.is_uq,
        RingMeta::FormalTriangular { left, right, .. } => {
            ctx.profile_of(left).flags.is_uq && ctx.profile_of(right).flags.is_uq
        }
        _ => unreachable!("applicability gate"),
    };
    CheckOutcome::fail_if(ctx.profile.flags.is_uq != expected, || {
        format!(
            "UQ flag {} but the base rings give {expected}",
            ctx.profile.flags.is_uq
        )
    })
}

// --- C09: central closure ------------------------------------------------------

fn c09_check(ctx: &ClaimContext) -> CheckOutcome {
    let ring = ctx.ring;
    let p = &ctx.profile;
    for a in p.quasinilpotents.iter() {
        for b in p.center.iter() {
            if !p.quasinilpotents.contains(ring.mul(a, b)) {
                return CheckOutcome::Fail(format!(
                    "{a} quasinilpotent, {b} central, product escapes"
                ));
            }
            if p.quasinilpotents.contains(b) && !p.quasinilpotents.contains(ring.add(a, b)) {
                return CheckOutcome::Fail(format!(
                    "{a}, {b} quasinilpotent with {b} central, sum escapes"
                ));
            }
        }
    }
    // the centrality hypothesis is not redundant: in a 2x2 matrix ring the
    // matrix units e12, e21 are guasinilpotent while their product and sum
    // are not
    if let RingMeta::Matrix { base, n: 2 } = ring.meta() {
        let zero = base.zero();
        let one = base.one();
        let e12 = matrix_index(base, 2, &[zero, one, zero, zero]);
        let e21 = matrix_index(base, 2, &[zero, zero, one, zero]);
        let qn = &p.quasinilpotents;
        if !qn.contains(e12) || !qn.contains(e21) {
            return CheckOutcome::Fail("matrix units are not quasinilpotent".to_string());
        }
        if qn.contains(ring.mul(e12, e21)) {
            return CheckOutcome::Fail(
                "product of the matrix units stayed quasinilpotent".to_string(),
            );
        }
        if qn.contains(ring.add(e12, e21)) {
            return CheckOutcome::Fail("sum of the matrix units stayed quasinilpotent".to_string());
        }
    }
    CheckOutcome::Pass
}

// --- C10: unit-sum characterization (flag site) --------------------------------

fn c10_check(ctx: &ClaimContext) -> CheckOutcome {
    let ring = ctx.ring;
    let p = &ctx.profile;
    let central_units = p.units.set.intersect(&p.center);
    let mut sums = Subset::empty(ring);
    for u in p.units.set.iter() {
        for v in central_units.iter() {
            sums.insert(ring.add(u, v));
        }
    }
    let equality = subset_eq(&sums, &p.quasinilpotents);
    if equality != p.flags.is_uq {
        return CheckOutcome::Flagged(format!(
            "UQ flag {} but U + (U ∩ Z) {} the quasinilpotents",
            p.flags.is_uq,
            if equality { "equals" } else { "differs from" }
        ));
    }
    CheckOutcome::Pass
}

// --- C11: matrix rings are never UQ --------------------------------------------

fn is_matrix_2plus(ctx: &ClaimContext) -> bool {
    matches!(ctx.ring.meta(), RingMeta::Matrix { n, .. } if *n >= 2)
}

fn c11_check(ctx: &ClaimContext) -> CheckOutcome {
    let p = &ctx.profile;
    if p.flags.is_uq {
        return CheckOutcome::Fail("matrix ring classified UQ".to_string());
    }
    let ring = ctx.ring;
    let witness = p
        .units
        .set
        .iter()
        .find(|&u| p.units.set.contains(ring.sub(u, ring.one())));
    match witness {
        Some(u) => {
            // u and u - 1 both units: u - 1 cannot be quasinilpotent
            CheckOutcome::fail_if(p.quasinilpotents.contains(ring.sub(u, ring.one())), || {
                format!("unit {u} has u - 1 both a unit and quasinilpotent")
            })
        }
        None => CheckOutcome::Fail("no unit u with u - 1 a unit was found".to_string()),
    }
}

// --- C12: symmetry of 1 - ab -----------------------------------------------------

fn c12_check(ctx: &ClaimContext) -> CheckOutcome {
    let ring = ctx.ring;
    let qn = &ctx.profile.quasinilpotents;
    let one = ring.one();
    for a in 0..ring.size() {
        for b in 0..ring.size() {
            let ab = qn.contains(ring.sub(one, ring.mul(a, b)));
            let ba = qn.contains(ring.sub(one, ring.mul(b, a)));
            if ab != ba {
                return CheckOutcome::Fail(format!(
                    "1 - ab quasinilpotent is {ab} but 1 - ba is {ba} at a={a}, b={b}"
                ));
            }
        }
    }
    CheckOutcome::Pass
}

// --- C13: no two units sum to one ------------------------------------------------

fn no_unit_sum_is_one(p: &crate::analysis::RingProfile) -> Option<(usize, usize)> {
    let ring = p.ring();
    let units: Vec<usize> = p.units.set.iter().collect();
    for &u in &units {
        for &v in &units {
            if ring.add(u, v) == ring.one() {
                return Some((u, v));
            }
        }
    }
    None
}

fn c13_check(ctx: &ClaimContext) -> CheckOutcome {
    if let Some((u, v)) = no_unit_sum_is_one(&ctx.profile) {
        return CheckOutcome::Fail(format!("units {u} + {v} = 1"));
    }
    let quotient = match crate::analysis::mod_jacobson(ctx.ring, ctx.config) {
        Ok(q) => q,
        Err(e) => return CheckOutcome::Fail(format!("radical quotient: {e}")),
    };
    let qp = ctx.profile_of(&quotient);
    if let Some((u, v)) = no_unit_sum_is_one(&qp) {
        return CheckOutcome::Fail(format!("in the radical quotient, units {u} + {v} = 1"));
    }
    CheckOutcome::Pass
}

// --- C14: two in the radical, squares, additive closure --------------------------

fn c14_check(ctx: &ClaimContext) -> CheckOutcome {
    let ring = ctx.ring;
    let p = &ctx.profile;
    let two = ring.add(ring.one(), ring.one());
    if !p.quasinilpotents.contains(two) {
        return CheckOutcome::Fail("1 + 1 is not quasinilpotent".to_string());
    }
    if !p.jacobson.contains(two) {
        return CheckOutcome::Fail("1 + 1 is not in the radical".to_string());
    }
    for x in 0..ring.size() {
        let x2 = ring.mul(x, x);
        if p.quasinilpotents.contains(x) != p.quasinilpotents.contains(x2) {
            return CheckOutcome::Fail(format!("x = {x}: x and x^2 disagree on quasinilpotence"));
        }
    }
    let qn: Vec<usize> = p.quasinilpotents.iter().collect();
    let add_closed = qn.iter().all(|&a| {
        qn.iter()
            .all(|&b| p.quasinilpotents.contains(ring.add(a, b)))
    });
    if add_closed {
        for &a in &qn {
            for &b in &qn {
                if !p.quasinilpotents.contains(ring.mul(a, b)) {
                    return CheckOutcome::Fail(format!(
                        "quasinilpotents additively closed but {a} * {b} escapes"
                    ));
                }
            }
        }
    }
    CheckOutcome::Pass
}

// --- C15: modular criterion -------------------------------------------------------

fn is_zmod(ctx: &ClaimContext) -> bool {
    matches!(ctx.ring.meta(), RingMeta::Zmod { .. })
}

fn c15_check(ctx: &ClaimContext) -> CheckOutcome {
    let RingMeta::Zmod { modulus } = ctx.ring.meta() else {
        unreachable!("applicability gate");
    };
    let expected = modulus.is_power_of_two();
    CheckOutcome::fail_if(ctx.profile.flags.is_uq != expected, || {
        format!(
            "modulus {modulus}: UQ flag {} but the power-of-two test gives {expected}",
            ctx.profile.flags.is_uq
        )
    })
}

// --- C16: division / local / semisimple -------------------------------------------

fn is_div_local_ss(ctx: &ClaimContext) -> bool {
    let f = &ctx.profile.flags;
    f.is_division || f.is_local || f.is_semisimple
}

fn c16_check(ctx: &ClaimContext) -> CheckOutcome {
    let p = &ctx.profile;
    let f = &p.flags;
    if f.is_division && f.is_uq != (ctx.ring.size() == 2) {
        return CheckOutcome::Fail(format!(
            "division ring of size {} has UQ flag {}",
            ctx.ring.size(),
            f.is_uq
        ));
    }
    if f.is_local {
        if f.is_uq != f.is_uniquely_clean {
            return CheckOutcome::Fail(format!(
                "local ring: UQ flag {} but uniquely clean {}",
                f.is_uq, f.is_uniquely_clean
            ));
        }
        if f.is_uq {
            match crate::analysis::mod_jacobson(ctx.ring, ctx.config) {
                Ok(q) => {
                    if q.size() != 2 {
                        return CheckOutcome::Fail(format!(
                            "local UQ ring has residue ring of size {}",
                            q.size()
                        ));
                    }
                }
                Err(e) => return CheckOutcome::Fail(format!("radical quotient: {e}")),
            }
        }
    }
    if f.is_semisimple && f.is_uq != f.is_boolean {
        return CheckOutcome::Fail(format!(
            "semisimple ring: UQ flag {} but Boolean {}",
            f.is_uq, f.is_boolean
        ));
    }
    CheckOutcome::Pass
}

// --- C17: radical-quotient equivalences --------------------------------------------

fn c17_check(ctx: &ClaimContext) -> CheckOutcome {
    let p = &ctx.profile;
    let quotient = match crate::analysis::mod_jacobson(ctx.ring, ctx.config) {
        Ok(q) => q,
        Err(e) => return CheckOutcome::Fail(format!("radical quotient: {e}")),
    };
    let qp = ctx.profile_of(&quotient);
    let conds = [
        qp.flags.is_uq,
        qp.flags.is_boolean,
        p.flags.is_uj,
        qp.flags.is_uu,
        p.flags.is_uq && subset_eq(&p.quasinilpotents, &p.jacobson),
    ];
    CheckOutcome::fail_if(conds.iter().any(|&c| c != conds[0]), || {
        format!(
            "the five equivalent conditions disagree: {conds:?} \
             (quotient UQ, quotient Boolean, UJ, quotient UU, UQ with QN = J)"
        )
    })
}

// --- C18: regular rings --------------------------------------------------------------

fn is_regular(ctx: &ClaimContext) -> bool {
    ctx.profile.flags.is_regular
}

fn c18_check(ctx: &ClaimContext) -> CheckOutcome {
    let f = &ctx.profile.flags;
    let conds = [f.is_uq, f.is_uj, f.is_uu, f.is_boolean];
    CheckOutcome::fail_if(conds.iter().any(|&c| c != conds[0]), || {
        format!("regular ring: UQ/UJ/UU/Boolean disagree: {conds:?}")
    })
}

// --- C19: clean iff quasi nil-clean ---------------------------------------------------

fn c19_check(ctx: &ClaimContext) -> CheckOutcome {
    for a in 0..ctx.ring.size() {
        let e = element_predicates(&ctx.profile, a);
        if e.clean != e.quasi_nil_clean {
            return CheckOutcome::Fail(format!(
                "element {a}: clean {} but quasi nil-clean {}",
                e.clean, e.quasi_nil_clean
            ));
        }
        if e.strongly_clean != e.strongly_quasi_nil_clean {
            return CheckOutcome::Fail(format!(
                "element {a}: strongly clean {} but strongly quasi nil-clean {}",
                e.strongly_clean, e.strongly_quasi_nil_clean
            ));
        }
    }
    CheckOutcome::Pass
}

// --- C20: three-way UQ characterization -----------------------------------------------

fn c20_check(ctx: &ClaimContext) -> CheckOutcome {
    let ring = ctx.ring;
    let p = &ctx.profile;
    let b1 = p.flags.is_uq;
    let b2 = (0..ring.size()).all(|a| {
        let e = element_predicates(p, a);
        !e.clean || e.strongly_quasi_nil_clean
    });
    let central_idempotents: Vec<usize> = p.idempotents.intersect(&p.center).iter().collect();
    let b3 = p.units.set.iter().all(|u| {
        central_idempotents
            .iter()
            .any(|&e| p.quasinilpotents.contains(ring.sub(u, e)))
    });
    CheckOutcome::fail_if(b1 != b2 || b2 != b3, || {
        format!(
            "UQ {b1}, every-clean-element-strongly-quasi-nil-clean {b2}, \
             units-split-off-central-idempotents {b3}"
        )
    })
}

// --- C21: strongly quasi nil-clean rings ------------------------------------------------

fn c21_check(ctx: &ClaimContext) -> CheckOutcome {
    let p = &ctx.profile;
    let all_sqnc = (0..ctx.ring.size()).all(|a| element_predicates(p, a).strongly_quasi_nil_clean);
    let rhs = p.flags.is_uq && p.flags.is_strongly_clean;
    CheckOutcome::fail_if(all_sqnc != rhs, || {
        format!(
            "every element strongly quasi nil-clean: {all_sqnc}; \
             UQ and strongly clean: {rhs}"
        )
    })
}

// --- C22: six-way equivalence ------------------------------------------------------------

fn c22_check(ctx: &ClaimContext) -> CheckOutcome {
    let p = &ctx.profile;
    let quotient = match crate::analysis::mod_jacobson(ctx.ring, ctx.config) {
        Ok(q) => q,
        Err(e) => return CheckOutcome::Fail(format!("radical quotient: {e}")),
    };
    let qp = ctx.profile_of(&quotient);
    let conds = [
        p.flags.is_uq,
        qp.flags.is_uq,
        qp.flags.is_boolean,
        p.flags.is_uj,
        qp.flags.is_uj,
        qp.flags.is_uu,
    ];
    CheckOutcome::fail_if(conds.iter().any(|&c| c != conds[0]), || {
        format!(
            "the six equivalent conditions disagree: {conds:?} \
             (UQ, quotient UQ, quotient Boolean, UJ, quotient UJ, quotient UU)"
        )
    })
}

// --- C23: UQ = UJ = UU for finite rings ----------------------------------------------------

fn c23_check(ctx: &ClaimContext) -> CheckOutcome {
    let f = &ctx.profile.flags;
    CheckOutcome::fail_if(f.is_uq != f.is_uj || f.is_uj != f.is_uu, || {
        format!("UQ {}, UJ {}, UU {} disagree", f.is_uq, f.is_uj, f.is_uu)
    })
}

// --- C24: UQ iff J-clean ---------------------------------------------------------------------

fn c24_check(ctx: &ClaimContext) -> CheckOutcome {
    let f = &ctx.profile.flags;
    CheckOutcome::fail_if(f.is_uq != f.is_j_clean, || {
        format!("UQ {} but J-clean {}", f.is_uq, f.is_j_clean)
    })
}

// --- C25: lifting through radical-contained ideals --------------------------------------------

fn has_radical(ctx: &ClaimContext) -> bool {
    ctx.profile.jacobson.card() > 1
}

fn c25_check(ctx: &ClaimContext) -> CheckOutcome {
    let ring = ctx.ring;
    let p = &ctx.profile;
    let mut ideals: Vec<Subset> = vec![p.jacobson.clone()];
    for j in p.jacobson.iter() {
        if j == ring.zero() {
            continue;
        }
        let principal = construct::ideal_generated(ring, &Subset::from_indices(ring, [j]));
        if !ideals.contains(&principal) {
            ideals.push(principal);
        }
        if ideals.len() >= 5 {
            break;
        }
    }
    for ideal in &ideals {
        let (quotient, proj) = match construct::quotient_ring(ring, ideal, ctx.config) {
            Ok(v) => v,
            Err(e) => return CheckOutcome::Fail(format!("quotient: {e}")),
        };
        let qp = ctx.profile_of(&quotient);
        for x in 0..ring.size() {
            if qp.quasinilpotents.contains(proj[x]) && !p.quasinilpotents.contains(x) {
                return CheckOutcome::Fail(format!(
                    "element {x} is quasinilpotent modulo an ideal of size {} but not in the ring",
                    ideal.card()
                ));
            }
        }
        if qp.flags.is_uq && !p.flags.is_uq {
            return CheckOutcome::Fail(format!(
                "quotient by an ideal of size {} is UQ but the ring is not",
                ideal.card()
            ));
        }
    }
    CheckOutcome::Pass
}

// --- C26: geometric sums -------------------------------------------------------------------------

fn c26_check(ctx: &ClaimContext) -> CheckOutcome {
    for a in ctx.profile.units.set.iter() {
        match geometric_sum_check(&ctx.profile, a, 6) {
            Ok(report) => {
                if let Some(step) = report.steps.iter().find(|s| !s.holds) {
                    return CheckOutcome::Fail(format!(
                        "unit {a}: partial sum up to exponent {} is not {}",
                        step.n,
                        if step.expects_unit {
                            "a unit"
                        } else {
                            "quasinilpotent"
                        }
                    ));
                }
            }
            Err(e) => return CheckOutcome::Fail(format!("unit {a}: {e}")),
        }
    }
    CheckOutcome::Pass
}

// --- C27 / C28 / C29 / C30: group rings -----------------------------------------------------------

fn is_group_ring(ctx: &ClaimContext) -> bool {
    matches!(ctx.ring.meta(), RingMeta::GroupRing { .. })
}

fn group_ring_parts(ctx: &ClaimContext) -> (FiniteRing, crate::construct::FiniteGroup) {
    match ctx.ring.meta() {
        RingMeta::GroupRing { base, group } => (base.clone(), group.clone()),
        _ => unreachable!("applicability gate"),
    }
}

fn c27_check(ctx: &ClaimContext) -> CheckOutcome {
    let (base, group) = group_ring_parts(ctx);
    if !ctx.profile.flags.is_uq {
        return CheckOutcome::Pass; // implication holds vacuously
    }
    let base_uq = ctx.profile_of(&base).flags.is_uq;
    if !base_uq {
        return CheckOutcome::Fail("group ring is UQ but the base ring is not".to_string());
    }
    if !group.is_2_group() {
        return CheckOutcome::Fail(format!(
            "group ring is UQ but the group has order {}",
            group.size()
        ));
    }
    CheckOutcome::Pass
}

fn uq_base_2group(ctx: &ClaimContext) -> bool {
    if !is_group_ring(ctx) {
        return false;
    }
    let (base, group) = group_ring_parts(ctx);
    group.is_2_group() && ctx.profile_of(&base).flags.is_uq
}

fn c28_check(ctx: &ClaimContext) -> CheckOutcome {
    CheckOutcome::fail_if(!ctx.profile.flags.is_uq, || {
        "UQ base and 2-group, but the group ring is not UQ".to_string()
    })
}

fn uj_base_2group(ctx: &ClaimContext) -> bool {
    if !is_group_ring(ctx) {
        return false;
    }
    let (base, group) = group_ring_parts(ctx);
    group.is_2_group() && ctx.profile_of(&base).flags.is_uj
}

fn c29_check(ctx: &ClaimContext) -> CheckOutcome {
    CheckOutcome::fail_if(!ctx.profile.flags.is_uj, || {
        "UJ base and 2-group, but the group ring is not UJ".to_string()
    })
}

fn c30_check(ctx: &ClaimContext) -> CheckOutcome {
    let aug = match augmentation_ideal(ctx.ring) {
        Ok(a) => a,
        Err(e) => return CheckOutcome::Fail(format!("augmentation ideal: {e}")),
    };
    let escape = aug.iter().find(|&f| !ctx.profile.jacobson.contains(f));
    match escape {
        Some(f) => CheckOutcome::Fail(format!(
            "augmentation-ideal element {f} is outside the radical"
        )),
        None => CheckOutcome::Pass,
    }
}

// --- C31 / C32 / C33: the parameterized families ----------------------------------------------------

fn is_presented_family(ctx: &ClaimContext) -> bool {
    matches!(
        ctx.ring.meta(),
        RingMeta::PolyPair { .. } | RingMeta::FreePair { .. } | RingMeta::Alternating { .. }
    )
}

fn c31_check(ctx: &ClaimContext) -> CheckOutcome {
    let result = match ctx.ring.meta() {
        RingMeta::PolyPair { base, n, m } => construct::family_iso(
            FamilyIsoKind::PolyPairToToeplitzPair,
            *n,
            *m,
            base,
            ctx.config,
        ),
        RingMeta::FreePair { base, n, m } => construct::family_iso(
            FamilyIsoKind::FreePairToToeplitzGrid,
            *n,
            *m,
            base,
            ctx.config,
        ),
        RingMeta::Alternating { base, n } => construct::family_iso(
            FamilyIsoKind::AlternatingToInterleaved,
            *n,
            *n,
            base,
            ctx.config,
        ),
        _ => unreachable!("applicability gate"),
    };
    match result {
        Ok(_) => CheckOutcome::Pass,
        Err(e) => CheckOutcome::Fail(format!("explicit isomorphism failed: {e}")),
    }
}

fn c32_check(ctx: &ClaimContext) -> CheckOutcome {
    let ring = ctx.ring;
    let base = ctx.ring.meta().base().expect("family has a base").clone();
    let len = family_len(ctx.ring.meta()).expect("family has a length");
    let bp = ctx.profile_of(&base);
    for f in 0..ring.size() {
        let head = family_digits(&base, len, f)[0];
        let expected = bp.units.set.contains(head);
        let actual = ctx.profile.units.set.contains(f);
        if expected != actual {
            return CheckOutcome::Fail(format!(
                "element {f}: head coefficient unit {expected} but element unit {actual}"
            ));
        }
    }
    CheckOutcome::Pass
}

fn c33_check(ctx: &ClaimContext) -> CheckOutcome {
    let base = ctx.ring.meta().base().expect("family has a base").clone();
    let base_uq = ctx.profile_of(&base).flags.is_uq;
    CheckOutcome::fail_if(ctx.profile.flags.is_uq != base_uq, || {
        format!(
            "family UQ flag {} but base UQ flag {base_uq}",
            ctx.profile.flags.is_uq
        )
    })
}

// --- C34: gs-Drazin equivalence -----------------------------------------------------------------------

fn c34_check(ctx: &ClaimContext) -> CheckOutcome {
    for a in 0..ctx.ring.size() {
        let has_inverse = gs_drazin_inverse(&ctx.profile, a).is_some();
        let sqnc = element_predicates(&ctx.profile, a).strongly_quasi_nil_clean;
        if has_inverse != sqnc {
            return CheckOutcome::Fail(format!(
                "element {a}: gs-Drazin invertible {has_inverse} but strongly quasi nil-clean {sqnc}"
            ));
        }
    }
    CheckOutcome::Pass
}

// --- registry ------------------------------------------------------------------------------------------

static REGISTRY: &[Claim] = &[
    Claim {
        id: "C01",
        title: "containments",
        statement: "The nilpotents and the Jacobson radical are contained in the quasinilpotents.",
        applicability: "always",
        cost: CostClass::Cheap,
        flag_site: false,
        applies: always,
        check: c01_check,
    },
    Claim {
        id: "C02",
        title: "disjointness",
        statement: "Quasinilpotents are disjoint from the units, and from the nonzero \
                    idempotents (in literal mode, from all idempotents; that fails exactly at \
                    zero and is reported as flagged).",
        applicability: "always",
        cost: CostClass::Cheap,
        flag_site: true,
        applies: always,
        check: c02_check,
    },
    Claim {
        id: "C03",
        title: "product quasinilpotents",
        statement: "In a direct product, an element is quasinilpotent exactly when every \
                    component is.",
        applicability: "product rings",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: is_product,
        check: c03_check,
    },
    Claim {
        id: "C04",
        title: "product UQ transfer",
        statement: "A direct product is UQ exactly when every factor is UQ.",
        applicability: "product rings",
        cost: CostClass::Cheap,
        flag_site: false,
        applies: is_product,
        check: c04_check,
    },
    Claim {
        id: "C05",
        title: "corners",
        statement: "For an idempotent e, the quasinilpotents of the corner ring eRe are the \
                    quasinilpotents of R lying in it; corners of a UQ ring are UQ.",
        applicability: "rings with a nontrivial idempotent",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: has_nontrivial_idempotent,
        check: c05_check,
    },
    Claim {
        id: "C06",
        title: "good subrings",
        statement: "The canonical base embeddings are good (units of the subring are exactly \
                    the units of the ambient ring inside it); ambient quasinilpotents restrict \
                    to quasinilpotents of a good subring, and a good subring of a UQ ring is UQ.",
        applicability: "constructions with a canonical base embedding",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: has_canonical_embedding,
        check: c06_check,
    },
    Claim {
        id: "C07",
        title: "structured quasinilpotent shapes",
        statement: "In trivial extensions, formal triangular rings, triangular matrix rings, \
                    and truncated polynomial rings, elements whose distinguished coordinates \
                    are quasinilpotent in the base are quasinilpotent; equality holds when the \
                    base rings are UQ.",
        applicability: "structured constructions",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: is_structured,
        check: c07_check,
    },
    Claim {
        id: "C08",
        title: "structured UQ transfer",
        statement: "Trivial extensions, formal triangular rings, triangular matrix rings, and \
                    truncated polynomial rings are UQ exactly when their base rings are.",
        applicability: "structured constructions",
        cost: CostClass::Cheap,
        flag_site: false,
        applies: is_structured,
        check: c08_check,
    },
    Claim {
        id: "C09",
        title: "central products and sums",
        statement: "A quasinilpotent times a central element is quasinilpotent; a \
                    quasinilpotent plus a central quasinilpotent is quasinilpotent. In the \
                    2x2 matrix ring the off-diagonal matrix units show the centrality \
                    hypothesis is not redundant.",
        applicability: "always",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: always,
        check: c09_check,
    },
    Claim {
        id: "C10",
        title: "unit-sum characterization",
        statement: "A ring is UQ exactly when U + (U ∩ Z) equals the quasinilpotents; any \
                    counterexample is reported as flagged rather than silently failed.",
        applicability: "always",
        cost: CostClass::Quadratic,
        flag_site: true,
        applies: always,
        check: c10_check,
    },
    Claim {
        id: "C11",
        title: "matrix rings are not UQ",
        statement: "Full matrix rings of dimension at least 2 are never UQ, witnessed by a \
                    unit u with u - 1 also a unit.",
        applicability: "matrix rings of dimension >= 2",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: is_matrix_2plus,
        check: c11_check,
    },
    Claim {
        id: "C12",
        title: "product symmetry",
        statement: "In a UQ ring, 1 - ab is quasinilpotent exactly when 1 - ba is.",
        applicability: "UQ rings",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: when_uq,
        check: c12_check,
    },
    Claim {
        id: "C13",
        title: "unit sums avoid one",
        statement: "In a UQ ring no two units sum to 1, and the same holds in the quotient by \
                    the radical.",
        applicability: "UQ rings",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: when_uq,
        check: c13_check,
    },
    Claim {
        id: "C14",
        title: "two, squares, and closure",
        statement: "In a UQ ring 1 + 1 is quasinilpotent and lies in the radical; an element \
                    is quasinilpotent exactly when its square is; and if the quasinilpotents \
                    are additively closed they are multiplicatively closed as well.",
        applicability: "UQ rings",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: when_uq,
        check: c14_check,
    },
    Claim {
        id: "C15",
        title: "modular criterion",
        statement: "The ring of integers modulo n is UQ exactly when n is a power of two.",
        applicability: "modular rings",
        cost: CostClass::Cheap,
        flag_site: false,
        applies: is_zmod,
        check: c15_check,
    },
    Claim {
        id: "C16",
        title: "division, local, semisimple",
        statement: "A UQ division ring has exactly two elements; a local ring is UQ exactly \
                    when it is uniquely clean, and then its residue ring has two elements; a \
                    semisimple ring is UQ exactly when it is Boolean.",
        applicability: "division, local, or semisimple rings",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: is_div_local_ss,
        check: c16_check,
    },
    Claim {
        id: "C17",
        title: "radical-quotient equivalences",
        statement: "The following agree: the radical quotient is UQ; the radical quotient is \
                    Boolean; the ring is UJ; the radical quotient is UU; the ring is UQ with \
                    quasinilpotents equal to the radical. (Finite rings are semipotent.)",
        applicability: "always",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: always,
        check: c17_check,
    },
    Claim {
        id: "C18",
        title: "regular rings",
        statement: "For a von Neumann regular ring, UQ, UJ, UU, and Boolean coincide.",
        applicability: "regular rings",
        cost: CostClass::Cheap,
        flag_site: false,
        applies: is_regular,
        check: c18_check,
    },
    Claim {
        id: "C19",
        title: "clean vs quasi nil-clean elements",
        statement: "In a UQ ring an element is clean exactly when it is quasi nil-clean, and \
                    strongly clean exactly when it is strongly quasi nil-clean.",
        applicability: "UQ rings",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: when_uq,
        check: c19_check,
    },
    Claim {
        id: "C20",
        title: "three-way UQ characterization",
        statement: "These agree: the ring is UQ; every clean element is strongly quasi \
                    nil-clean; every unit is a central idempotent plus a quasinilpotent.",
        applicability: "always",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: always,
        check: c20_check,
    },
    Claim {
        id: "C21",
        title: "strongly quasi nil-clean rings",
        statement: "Every element is strongly quasi nil-clean exactly when the ring is UQ and \
                    strongly clean.",
        applicability: "always",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: always,
        check: c21_check,
    },
    Claim {
        id: "C22",
        title: "six-way equivalence",
        statement: "These agree: the ring is UQ; the radical quotient is UQ; the radical \
                    quotient is Boolean; the ring is UJ; the radical quotient is UJ; the \
                    radical quotient is UU. (Finite rings are potent.)",
        applicability: "always",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: always,
        check: c22_check,
    },
    Claim {
        id: "C23",
        title: "finite coincidence",
        statement: "For finite rings, UQ, UJ, and UU coincide.",
        applicability: "always",
        cost: CostClass::Cheap,
        flag_site: false,
        applies: always,
        check: c23_check,
    },
    Claim {
        id: "C24",
        title: "UQ iff J-clean",
        statement: "A finite (hence potent) ring is UQ exactly when every element is an \
                    idempotent plus a radical element.",
        applicability: "always",
        cost: CostClass::Cheap,
        flag_site: false,
        applies: always,
        check: c24_check,
    },
    Claim {
        id: "C25",
        title: "lifting along radical ideals",
        statement: "For an ideal contained in the radical, elements quasinilpotent modulo the \
                    ideal are quasinilpotent, and if the quotient is UQ so is the ring.",
        applicability: "rings with a nonzero radical",
        cost: CostClass::Cubic,
        flag_site: false,
        applies: has_radical,
        check: c25_check,
    },
    Claim {
        id: "C26",
        title: "geometric sums",
        statement: "In a UQ ring, for every unit a the partial sums 1 + a + ... + a^n are \
                    units for even n and quasinilpotent for odd n.",
        applicability: "UQ rings",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: when_uq,
        check: c26_check,
    },
    Claim {
        id: "C27",
        title: "group ring necessity",
        statement: "If a group ring is UQ then the base ring is UQ and the group is a 2-group.",
        applicability: "group rings",
        cost: CostClass::Cheap,
        flag_site: false,
        applies: is_group_ring,
        check: c27_check,
    },
    Claim {
        id: "C28",
        title: "group ring sufficiency",
        statement: "A group ring over a UQ base with a finite 2-group is UQ.",
        applicability: "group rings with UQ base and 2-group",
        cost: CostClass::Cheap,
        flag_site: false,
        applies: uq_base_2group,
        check: c28_check,
    },
    Claim {
        id: "C29",
        title: "group ring UJ transfer",
        statement: "A group ring over a UJ base with a finite 2-group is UJ.",
        applicability: "group rings with UJ base and 2-group",
        cost: CostClass::Cheap,
        flag_site: false,
        applies: uj_base_2group,
        check: c29_check,
    },
    Claim {
        id: "C30",
        title: "augmentation ideal",
        statement: "For a UQ base and a finite 2-group, the augmentation ideal of the group \
                    ring lies inside its radical.",
        applicability: "group rings with UQ base and 2-group",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: uq_base_2group,
        check: c30_check,
    },
    Claim {
        id: "C31",
        title: "family isomorphisms",
        statement: "The explicit coefficient-placement maps from the presented pair and \
                    alternating families onto their matrix forms are ring isomorphisms.",
        applicability: "presented family rings",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: is_presented_family,
        check: c31_check,
    },
    Claim {
        id: "C32",
        title: "family unit shapes",
        statement: "In the presented families an element is a unit exactly when its head \
                    coefficient is a unit of the base ring.",
        applicability: "presented family rings",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: is_presented_family,
        check: c32_check,
    },
    Claim {
        id: "C33",
        title: "family UQ transfer",
        statement: "The presented families are UQ exactly when the base ring is UQ.",
        applicability: "presented family rings",
        cost: CostClass::Cheap,
        flag_site: false,
        applies: is_presented_family,
        check: c33_check,
    },
    Claim {
        id: "C34",
        title: "gs-Drazin equivalence",
        statement: "An element has a generalized strongly Drazin inverse exactly when it is \
                    strongly quasi nil-clean.",
        applicability: "always",
        cost: CostClass::Quadratic,
        flag_site: false,
        applies: always,
        check: c34_check,
    },
];

/// The full claim registry, in report order.
pub fn registry() -> &'static [Claim] {
    REGISTRY
}
