//! Element-set and classifier analysis: units, idempotents, nilpotents,
//! Jacobson radical, quasinilpotents, the lower nilradical, the augmentation
//! ideal of a group ring, and the ring-level classifier flags.

mod elements;
mod nilradical;

pub use elements::{
    element_predicates, geometric_sum_check, gs_drazin_inverse, ElementPredicates,
    GeometricSumReport, GeometricSumStep,
};
pub use nilradical::lower_nilradical;

use std::sync::Arc;

use crate::config::Config;
use crate::construct::group_ring::group_ring_coefficients;
use crate::ring::{FiniteRing, Result, RingError, RingMeta, Subset};

/// The unit set together with the two-sided inverse of each unit
/// (`u32::MAX` marks a non-unit).
pub struct UnitGroup {
    pub set: Subset,
    pub inverse: Vec<u32>,
}

/// `{a : exists b with ab = ba = 1}`. One-sided inverses are two-sided in a
/// finite ring, but both sides are confirmed anyway.
pub fn units(ring: &FiniteRing) -> UnitGroup {
    let n = ring.size();
    let one = ring.one();
    let mut set = Subset::empty(ring);
    let mut inverse = vec![u32::MAX; n];
    for a in 0..n {
        for b in 0..n {
            if ring.mul(a, b) == one && ring.mul(b, a) == one {
                set.insert(a);
                inverse[a] = b as u32;
                break;
            }
        }
    }
    UnitGroup { set, inverse }
}

/// `{e : e^2 = e}`.
pub fn idempotents(ring: &FiniteRing) -> Subset {
    Subset::collect(ring, |a| ring.mul(a, a) == a)
}

/// `{a : a^k = 0 for some k >= 1}`, by power iteration with cycle
/// detection.
pub fn nilpotents(ring: &FiniteRing) -> Subset {
    let n = ring.size();
    let zero = ring.zero();
    let mut stamp = vec![0u32; n];
    let mut current = 0u32;
    Subset::collect(ring, |a| {
        current += 1;
        let mut p = a;
        loop {
            if p == zero {
                return true;
            }
            if stamp[p] == current {
                return false; // revisited a nonzero power: cycle without 0
            }
            stamp[p] = current;
            p = ring.mul(p, a);
        }
    })
}

/// `{a : 1 - ra is a unit for every r}` (left quasi-regularity; valid as the
/// Jacobson radical in finite rings).
pub fn jacobson_radical(ring: &FiniteRing, units: &UnitGroup) -> Subset {
    let n = ring.size();
    let one = ring.one();
    Subset::collect(ring, |a| {
        (0..n).all(|r| units.set.contains(ring.sub(one, ring.mul(r, a))))
    })
}

/// `{a : 1 - ax is a unit for every x commuting with a}`, implemented
/// literally over the commutant.
pub fn quasinilpotents(ring: &FiniteRing, units: &UnitGroup) -> Subset {
    let n = ring.size();
    let one = ring.one();
    Subset::collect(ring, |a| {
        for x in 0..n {
            if ring.mul(a, x) != ring.mul(x, a) {
                continue;
            }
            if !units.set.contains(ring.sub(one, ring.mul(a, x))) {
                return false;
            }
        }
        true
    })
}

/// Kernel of the coefficient-sum map of a group ring.
pub fn augmentation_ideal(ring: &FiniteRing) -> Result<Subset> {
    let (base, group) = match ring.meta() {
        RingMeta::GroupRing { base, group } => (base.clone(), group.clone()),
        _ => return Err(RingError::NotAGroupRing),
    };
    Ok(Subset::collect(ring, |f| {
        let coeffs = group_ring_coefficients(&base, &group, f);
        let sum = coeffs
            .into_iter()
            .fold(base.zero(), |acc, c| base.add(acc, c));
        sum == base.zero()
    }))
}

/// Ring-level classifier flags. `semipotent` and `potent` are constant true:
/// a finite ring is semiperfect (it is Artinian with nilpotent radical), so
/// idempotents lift modulo the radical and every left ideal not inside the
/// radical contains a nonzero idempotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifierFlags {
    pub is_uq: bool,
    pub is_uj: bool,
    pub is_uu: bool,
    pub is_boolean: bool,
    pub is_reduced: bool,
    pub is_local: bool,
    pub is_division: bool,
    pub is_regular: bool,
    pub is_semisimple: bool,
    pub is_clean: bool,
    pub is_uniquely_clean: bool,
    pub is_strongly_clean: bool,
    pub is_j_clean: bool,
    pub is_dedekind_finite: bool,
    /// None when the ring exceeds the nilradical cap.
    pub is_2primal: Option<bool>,
    pub is_semipotent: bool,
    pub is_potent: bool,
}

/// Everything the claim registry needs about one ring, computed once.
pub struct RingProfile {
    ring: FiniteRing,
    pub units: UnitGroup,
    pub idempotents: Subset,
    pub nilpotents: Subset,
    pub jacobson: Subset,
    pub quasinilpotents: Subset,
    pub center: Subset,
    pub lower_nilradical: Option<Subset>,
    pub flags: ClassifierFlags,
}

impl RingProfile {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.units.set.contains(a)
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        let v = self.units.inverse[a];
        (v != u32::MAX).then_some(v as usize)
    }
}

/// One-shift of a subset: `{1 + q : q in set}`.
fn one_plus(ring: &FiniteRing, set: &Subset) -> Subset {
    let mut out = Subset::empty(ring);
    for q in set.iter() {
        out.insert(ring.add(ring.one(), q));
    }
    out
}

fn compute_flags(
    ring: &FiniteRing,
    units: &UnitGroup,
    idem: &Subset,
    nil: &Subset,
    jac: &Subset,
    qn: &Subset,
    nstar: Option<&Subset>,
) -> ClassifierFlags {
    let n = ring.size();
    let one = ring.one();

    let is_uq = one_plus(ring, qn) == units.set;
    let is_uj = one_plus(ring, jac) == units.set;
    let is_uu = one_plus(ring, nil) == units.set;
    let is_boolean = idem.card() == n;
    let is_reduced = nil.card() == 1;
    let is_division = units.set.card() == n - 1;
    let is_semisimple = jac.card() == 1;

    let nonunits: Vec<usize> = units.set.complement().iter().collect();
    let is_local = nonunits.iter().all(|&a| {
        nonunits
            .iter()
            .all(|&b| !units.set.contains(ring.add(a, b)))
    });

    let is_regular = (0..n).all(|a| (0..n).any(|x| ring.mul(ring.mul(a, x), a) == a));

    let is_dedekind_finite =
        (0..n).all(|a| (0..n).all(|b| ring.mul(a, b) != one || ring.mul(b, a) == one));

    let idem_list: Vec<usize> = idem.iter().collect();
    let mut is_clean = true;
    let mut is_uniquely_clean = true;
    let mut is_strongly_clean = true;
    let mut is_j_clean = true;
    for a in 0..n {
        let mut count = 0usize;
        let mut strongly = false;
        let mut j_ok = false;
        for &e in &idem_list {
            let d = ring.sub(a, e);
            if units.set.contains(d) {
                count += 1;
                if ring.mul(e, a) == ring.mul(a, e) {
                    strongly = true;
                }
            }
            if jac.contains(d) {
                j_ok = true;
            }
        }
        if count == 0 {
            is_clean = false;
            is_strongly_clean = false;
        }
        if count != 1 {
            is_uniquely_clean = false;
        }
        if !strongly {
            is_strongly_clean = false;
        }
        if !j_ok {
            is_j_clean = false;
        }
    }

    let is_2primal = nstar.map(|ns| *ns == *nil);

    ClassifierFlags {
        is_uq,
        is_uj,
        is_uu,
        is_boolean,
        is_reduced,
        is_local,
        is_division,
        is_regular,
        is_semisimple,
        is_clean,
        is_uniquely_clean,
        is_strongly_clean,
        is_j_clean,
        is_dedekind_finite,
        is_2primal,
        is_semipotent: true,
        is_potent: true,
    }
}

/// Compute (or fetch the memoized) profile of a ring. Subset computation is
/// sequential inside one profile (quasinilpotents and the radical need the
/// unit set); profiles of different rings may be computed concurrently.
pub fn profile(ring: &FiniteRing, config: &Config) -> Arc<RingProfile> {
    ring.profile_cache()
        .get_or_init(|| {
            let units = units(ring);
            let idem = idempotents(ring);
            let nil = nilpotents(ring);
            let jac = jacobson_radical(ring, &units);
            let qn = quasinilpotents(ring, &units);
            let center = ring.center();
            let nstar = if ring.size() <= config.nstar_cap {
                lower_nilradical(ring, config).ok()
            } else {
                None
            };
            let flags = compute_flags(ring, &units, &idem, &nil, &jac, &qn, nstar.as_ref());
            Arc::new(RingProfile {
                ring: ring.clone(),
                units,
                idempotents: idem,
                nilpotents: nil,
                jacobson: jac,
                quasinilpotents: qn,
                center,
                lower_nilradical: nstar,
                flags,
            })
        })
        .clone()
}

/// The quotient R/J(R), memoized on the ring. Returns the quotient and the
/// projection map.
pub fn mod_jacobson(ring: &FiniteRing, config: &Config) -> Result<FiniteRing> {
    if let Some(q) = ring.mod_jacobson_cache().get() {
        return Ok(q.clone());
    }
    let p = profile(ring, config);
    let (q, _) = crate::construct::ideal::quotient_ring(ring, &p.jacobson, config)?;
    let _ = ring.mod_jacobson_cache().set(q.clone());
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::matrix::{matrix_index, matrix_ring};
    use crate::construct::{cyclic, group_product, group_ring, product, upper_triangular, zmod};

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn unit_sets() {
        let z8 = zmod(8, &cfg()).unwrap();
        assert_eq!(units(&z8).set.to_vec(), vec![1, 3, 5, 7]);
        let f2 = zmod(2, &cfg()).unwrap();
        assert_eq!(units(&f2).set.to_vec(), vec![1]);
        let m2 = matrix_ring(2, &f2, &cfg()).unwrap();
        assert_eq!(units(&m2).set.card(), 6);
    }

    #[test]
    fn recorded_inverses_are_two_sided() {
        let z8 = zmod(8, &cfg()).unwrap();
        let u = units(&z8);
        for a in u.set.iter() {
            let inv = u.inverse[a] as usize;
            assert_eq!(z8.mul(a, inv), 1);
            assert_eq!(z8.mul(inv, a), 1);
        }
    }

    #[test]
    fn idempotent_sets() {
        let f2 = zmod(2, &cfg()).unwrap();
        let p = product(&[f2.clone(), f2.clone()], &cfg()).unwrap();
        assert_eq!(idempotents(&p).card(), 4);
        let z8 = zmod(8, &cfg()).unwrap();
        assert_eq!(idempotents(&z8).to_vec(), vec![0, 1]);
        let m2 = matrix_ring(2, &f2, &cfg()).unwrap();
        assert_eq!(idempotents(&m2).card(), 8);
    }

    #[test]
    fn nilpotent_sets() {
        let z8 = zmod(8, &cfg()).unwrap();
        assert_eq!(nilpotents(&z8).to_vec(), vec![0, 2, 4, 6]);
        let f2 = zmod(2, &cfg()).unwrap();
        let p = product(&[f2.clone(), f2.clone()], &cfg()).unwrap();
        assert_eq!(nilpotents(&p).card(), 1);
        let m2 = matrix_ring(2, &f2, &cfg()).unwrap();
        let e12 = matrix_index(&f2, 2, &[0, 1, 0, 0]);
        assert!(nilpotents(&m2).contains(e12));
    }

    #[test]
    fn radical_examples() {
        let z8 = zmod(8, &cfg()).unwrap();
        let u8 = units(&z8);
        assert_eq!(jacobson_radical(&z8, &u8).to_vec(), vec![0, 2, 4, 6]);

        let f2 = zmod(2, &cfg()).unwrap();
        let m2 = matrix_ring(2, &f2, &cfg()).unwrap();
        let um = units(&m2);
        let jac = jacobson_radical(&m2, &um);
        assert_eq!(jac.card(), 1);
        let a = matrix_index(&f2, 2, &[1, 1, 1, 1]);
        assert!(!jac.contains(a));

        let t2 = upper_triangular(2, &f2, &cfg()).unwrap();
        let ut = units(&t2);
        assert_eq!(jacobson_radical(&t2, &ut).card(), 2);
    }

    #[test]
    fn quasinilpotent_examples() {
        let f2 = zmod(2, &cfg()).unwrap();
        let m2 = matrix_ring(2, &f2, &cfg()).unwrap();
        let um = units(&m2);
        let qn = quasinilpotents(&m2, &um);
        let a = matrix_index(&f2, 2, &[1, 1, 1, 1]);
        assert!(qn.contains(a));

        let z8 = zmod(8, &cfg()).unwrap();
        let u8 = units(&z8);
        assert_eq!(quasinilpotents(&z8, &u8).to_vec(), vec![0, 2, 4, 6]);

        assert_eq!(quasinilpotents(&f2, &units(&f2)).to_vec(), vec![0]);
    }

    /// Independent quasinilpotent oracle: all-pairs recomputation with
    /// inline unit detection (no precomputed unit set).
    fn naive_quasinilpotents(ring: &crate::ring::FiniteRing) -> Vec<usize> {
        let n = ring.size();
        let one = ring.one();
        let is_unit = |v: usize| (0..n).any(|b| ring.mul(v, b) == one && ring.mul(b, v) == one);
        (0..n)
            .filter(|&a| {
                (0..n).all(|x| {
                    if ring.mul(a, x) != ring.mul(x, a) {
                        return true;
                    }
                    is_unit(ring.sub(one, ring.mul(a, x)))
                })
            })
            .collect()
    }

    #[test]
    fn quasinilpotents_match_the_naive_oracle_on_small_rings() {
        let f2 = zmod(2, &cfg()).unwrap();
        let rings = [
            zmod(6, &cfg()).unwrap(),
            zmod(8, &cfg()).unwrap(),
            matrix_ring(2, &f2, &cfg()).unwrap(),
            upper_triangular(2, &zmod(4, &cfg()).unwrap(), &cfg()).unwrap(),
            group_ring(&f2, &cyclic(3).unwrap(), &cfg()).unwrap(),
        ];
        for ring in &rings {
            let u = units(ring);
            let fast = quasinilpotents(ring, &u).to_vec();
            assert_eq!(fast, naive_quasinilpotents(ring), "ring {}", ring.label());
        }
    }

    #[test]
    fn lower_nilradical_examples() {
        let z8 = zmod(8, &cfg()).unwrap();
        assert_eq!(
            lower_nilradical(&z8, &cfg()).unwrap().to_vec(),
            vec![0, 2, 4, 6]
        );

        let f2 = zmod(2, &cfg()).unwrap();
        let m2 = matrix_ring(2, &f2, &cfg()).unwrap();
        assert_eq!(lower_nilradical(&m2, &cfg()).unwrap().card(), 1);

        let t2 = upper_triangular(2, &f2, &cfg()).unwrap();
        let p = profile(&t2, &cfg());
        assert_eq!(p.flags.is_2primal, Some(true));
    }

    #[test]
    fn lower_nilradical_equals_radical_in_finite_rings() {
        // the radical of a finite ring is nilpotent and the quotient is
        // semisimple, so the chain must recover exactly the radical
        let f2 = zmod(2, &cfg()).unwrap();
        let rings = [
            zmod(12, &cfg()).unwrap(),
            upper_triangular(3, &f2, &cfg()).unwrap(),
            group_ring(&f2, &cyclic(4).unwrap(), &cfg()).unwrap(),
        ];
        for ring in &rings {
            let p = profile(ring, &cfg());
            assert_eq!(
                p.lower_nilradical.as_ref().unwrap(),
                &p.jacobson,
                "ring {}",
                ring.label()
            );
        }
    }

    #[test]
    fn augmentation_ideal_examples() {
        let f2 = zmod(2, &cfg()).unwrap();
        let rg = group_ring(&f2, &cyclic(2).unwrap(), &cfg()).unwrap();
        let aug = augmentation_ideal(&rg).unwrap();
        // kernel of the coefficient sum: 0 and 1 + g
        assert_eq!(aug.to_vec(), vec![0, 3]);
        assert_eq!(aug.card(), 2); // |R|^(|G| - 1)

        let z4 = zmod(4, &cfg()).unwrap();
        let rg = group_ring(&z4, &cyclic(2).unwrap(), &cfg()).unwrap();
        let aug = augmentation_ideal(&rg).unwrap();
        assert_eq!(aug.card(), 4);
        let p = profile(&rg, &cfg());
        assert!(aug.is_subset_of(&p.jacobson));

        assert!(matches!(
            augmentation_ideal(&z4),
            Err(RingError::NotAGroupRing)
        ));
    }

    #[test]
    fn classifier_examples() {
        let checks: Vec<(&str, bool)> = vec![
            (
                "Zmod(8) UQ",
                profile(&zmod(8, &cfg()).unwrap(), &cfg()).flags.is_uq,
            ),
            (
                "Zmod(6) not UQ",
                !profile(&zmod(6, &cfg()).unwrap(), &cfg()).flags.is_uq,
            ),
            (
                "Zmod(12) not UQ",
                !profile(&zmod(12, &cfg()).unwrap(), &cfg()).flags.is_uq,
            ),
        ];
        for (what, ok) in checks {
            assert!(ok, "{what}");
        }

        let f2 = zmod(2, &cfg()).unwrap();
        let m2 = matrix_ring(2, &f2, &cfg()).unwrap();
        let pm = profile(&m2, &cfg());
        assert!(!pm.flags.is_uq);
        assert!(pm.flags.is_semisimple);
        assert!(pm.flags.is_regular);
        assert!(pm.flags.is_dedekind_finite);

        let rg = group_ring(&f2, &cyclic(4).unwrap(), &cfg()).unwrap();
        assert!(profile(&rg, &cfg()).flags.is_uq);

        let p = product(&[f2.clone(), f2.clone()], &cfg()).unwrap();
        let pp = profile(&p, &cfg());
        assert!(pp.flags.is_boolean);
        assert!(pp.flags.is_uq && pp.flags.is_uj && pp.flags.is_uu);

        let z4 = zmod(4, &cfg()).unwrap();
        let pz4 = profile(&z4, &cfg());
        assert!(pz4.flags.is_local);
        assert!(pz4.flags.is_uniquely_clean);
        assert!(!pz4.flags.is_division);

        let pf2 = profile(&f2, &cfg());
        assert!(pf2.flags.is_division);
    }

    #[test]
    fn profile_invariants_hold_on_mixed_rings() {
        let f2 = zmod(2, &cfg()).unwrap();
        let rings = [
            zmod(6, &cfg()).unwrap(),
            zmod(16, &cfg()).unwrap(),
            matrix_ring(2, &f2, &cfg()).unwrap(),
            group_ring(
                &f2,
                &group_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap(),
                &cfg(),
            )
            .unwrap(),
        ];
        for ring in &rings {
            let p = profile(ring, &cfg());
            assert!(p.nilpotents.is_subset_of(&p.quasinilpotents));
            assert!(p.jacobson.is_subset_of(&p.quasinilpotents));
            assert!(p.quasinilpotents.is_disjoint_from(&p.units.set));
            let nonzero_idem = {
                let mut s = p.idempotents.clone();
                s.remove(ring.zero());
                s
            };
            assert!(p.quasinilpotents.is_disjoint_from(&nonzero_idem));
            assert!(p.flags.is_semipotent && p.flags.is_potent);
        }
    }

    #[test]
    fn mod_jacobson_of_z8_is_f2() {
        let z8 = zmod(8, &cfg()).unwrap();
        let q = mod_jacobson(&z8, &cfg()).unwrap();
        assert_eq!(q.size(), 2);
        // memoized: second call returns the same handle
        let q2 = mod_jacobson(&z8, &cfg()).unwrap();
        assert!(q.same_ring(&q2));
    }
}
