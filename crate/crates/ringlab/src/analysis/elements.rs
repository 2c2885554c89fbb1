//! Per-element decomposition predicates: the clean family, the generalized
//! strongly Drazin inverse, and geometric partial sums of a unit.

use super::RingProfile;
use crate::ring::{Result, RingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementPredicates {
    /// a = e + u with e idempotent, u a unit.
    pub clean: bool,
    /// Clean with ea = ae.
    pub strongly_clean: bool,
    /// a = e + q with q nilpotent.
    pub nil_clean: bool,
    /// a = e + j with j in the radical.
    pub j_clean: bool,
    /// a = e + q with q quasinilpotent.
    pub quasi_nil_clean: bool,
    /// Quasi nil-clean with ea = ae.
    pub strongly_quasi_nil_clean: bool,
}

/// Scan the idempotents for every decomposition kind at once.
pub fn element_predicates(profile: &RingProfile, a: usize) -> ElementPredicates {
    let ring = profile.ring();
    let mut out = ElementPredicates {
        clean: false,
        strongly_clean: false,
        nil_clean: false,
        j_clean: false,
        quasi_nil_clean: false,
        strongly_quasi_nil_clean: false,
    };
    for e in profile.idempotents.iter() {
        let d = ring.sub(a, e);
        let commutes = ring.mul(e, a) == ring.mul(a, e);
        if profile.units.set.contains(d) {
            out.clean = true;
            if commutes {
                out.strongly_clean = true;
            }
        }
        if profile.nilpotents.contains(d) {
            out.nil_clean = true;
        }
        if profile.jacobson.contains(d) {
            out.j_clean = true;
        }
        if profile.quasinilpotents.contains(d) {
            out.quasi_nil_clean = true;
            if commutes {
                out.strongly_quasi_nil_clean = true;
            }
        }
    }
    out
}

/// Exhaustive search for x with xax = x, ax = xa, and a - ax
/// quasinilpotent. Returns the first witness in index order.
pub fn gs_drazin_inverse(profile: &RingProfile, a: usize) -> Option<usize> {
    let ring = profile.ring();
    (0..ring.size()).find(|&x| {
        let ax = ring.mul(a, x);
        ring.mul(x, ax) == x
            && ax == ring.mul(x, a)
            && profile.quasinilpotents.contains(ring.sub(a, ax))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeometricSumStep {
    pub n: u32,
    /// Index of 1 + a + ... + a^n.
    pub sum: usize,
    /// Even n: the sum must be a unit. Odd n: it must be quasinilpotent.
    pub expects_unit: bool,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct GeometricSumReport {
    pub steps: Vec<GeometricSumStep>,
}

impl GeometricSumReport {
    pub fn all_hold(&self) -> bool {
        self.steps.iter().all(|s| s.holds)
    }
}

/// For n = 1..=nmax form f_n = 1 + a + ... + a^n and check that f_n is a
/// unit for even n and quasinilpotent for odd n. Requires a UQ ring and a
/// unit argument.
pub fn geometric_sum_check(
    profile: &RingProfile,
    a: usize,
    nmax: u32,
) -> Result<GeometricSumReport> {
    let ring = profile.ring();
    if !profile.flags.is_uq {
        return Err(RingError::PreconditionFailed(format!(
            "geometric sum check requires a UQ ring, {} is not",
            ring.label()
        )));
    }
    if !profile.units.set.contains(a) {
        return Err(RingError::PreconditionFailed(format!(
            "geometric sum check requires a unit, element {a} is not"
        )));
    }
    let mut steps = Vec::with_capacity(nmax as usize);
    let mut sum = ring.one();
    let mut power = ring.one();
    for n in 1..=nmax {
        power = ring.mul(power, a);
        sum = ring.add(sum, power);
        let expects_unit = n % 2 == 0;
        let holds = if expects_unit {
            profile.units.set.contains(sum)
        } else {
            profile.quasinilpotents.contains(sum)
        };
        steps.push(GeometricSumStep {
            n,
            sum,
            expects_unit,
            holds,
        });
    }
    Ok(GeometricSumReport { steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::profile;
    use crate::config::Config;
    use crate::construct::zmod;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn clean_family_examples() {
        let z8 = zmod(8, &cfg()).unwrap();
        let p = profile(&z8, &cfg());
        let e6 = element_predicates(&p, 6);
        assert!(e6.quasi_nil_clean); // e = 0, q = 6
        assert!(e6.clean);

        let e1 = element_predicates(&p, 1);
        assert!(e1.clean); // e = 0, u = 1

        let z6 = zmod(6, &cfg()).unwrap();
        let p6 = profile(&z6, &cfg());
        // 3 = 4 + 5 with 4 idempotent and 5 a unit
        assert!(element_predicates(&p6, 3).clean);
    }

    #[test]
    fn gs_drazin_witnesses() {
        let z8 = zmod(8, &cfg()).unwrap();
        let p = profile(&z8, &cfg());
        // 6 is quasinilpotent, so x = 0 works and is found first
        assert_eq!(gs_drazin_inverse(&p, 6), Some(0));
        // for 1 the first witness is 1 itself
        assert_eq!(gs_drazin_inverse(&p, 1), Some(1));
    }

    #[test]
    fn gs_drazin_matches_strongly_quasi_nil_clean_on_z8() {
        let z8 = zmod(8, &cfg()).unwrap();
        let p = profile(&z8, &cfg());
        for a in 0..8 {
            assert_eq!(
                gs_drazin_inverse(&p, a).is_some(),
                element_predicates(&p, a).strongly_quasi_nil_clean,
                "element {a}"
            );
        }
    }

    #[test]
    fn geometric_sums_in_z8() {
        let z8 = zmod(8, &cfg()).unwrap();
        let p = profile(&z8, &cfg());
        let report = geometric_sum_check(&p, 3, 6).unwrap();
        assert!(report.all_hold());
        // f_2 = 1 + 3 + 9 = 13 = 5 mod 8, a unit
        assert_eq!(report.steps[1].sum, 5);
        assert!(report.steps[1].expects_unit);
        // f_1 = 4, quasinilpotent
        assert_eq!(report.steps[0].sum, 4);
        assert!(!report.steps[0].expects_unit);

        let report = geometric_sum_check(&p, 1, 6).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.steps[1].sum, 3);
    }

    #[test]
    fn geometric_sum_preconditions() {
        let z6 = zmod(6, &cfg()).unwrap();
        let p6 = profile(&z6, &cfg());
        assert!(geometric_sum_check(&p6, 5, 4).is_err()); // not a UQ ring

        let z8 = zmod(8, &cfg()).unwrap();
        let p8 = profile(&z8, &cfg());
        assert!(geometric_sum_check(&p8, 2, 4).is_err()); // not a unit
    }
}
