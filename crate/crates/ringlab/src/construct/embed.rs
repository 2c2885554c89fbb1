//! Verified ring embeddings and the good-subring test.
//!
//! An embedding is good when the subring's units are exactly the elements
//! whose image is a unit of the ambient ring. Canonical embeddings for the
//! constructions that admit one (constants into group rings, trivial
//! extensions, triangular matrices, truncated polynomials and the pair
//! families, plus the banded copy of R\[x\]/(x^n) inside T_n(R)) are built
//! here so claims can exercise them uniformly.

use crate::analysis;
use crate::config::Config;
use crate::ring::{FiniteRing, Result, RingError, RingMeta};

use super::matrix::{tri_pos, triangular_index, upper_triangular};
use super::poly::poly_coefficients;

/// An injective ring homomorphism `sub -> sup` given element-by-element.
/// `unital` records whether 1 maps to 1 (corner embeddings do not).
#[derive(Debug)]
pub struct RingEmbedding {
    sub: FiniteRing,
    sup: FiniteRing,
    map: Vec<usize>,
    unital: bool,
}

impl RingEmbedding {
    /// Verify injectivity, additivity, multiplicativity, and (when claimed)
    /// unitality, then wrap the map.
    pub fn new_verified(
        sub: FiniteRing,
        sup: FiniteRing,
        map: Vec<usize>,
        unital: bool,
    ) -> Result<RingEmbedding> {
        if map.len() != sub.size() {
            return Err(RingError::VerificationFailed(
                "embedding map has wrong length".into(),
            ));
        }
        let mut seen = vec![false; sup.size()];
        for &v in &map {
            if v >= sup.size() {
                return Err(RingError::VerificationFailed(
                    "embedding image out of range".into(),
                ));
            }
            if seen[v] {
                return Err(RingError::VerificationFailed(
                    "embedding is not injective".into(),
                ));
            }
            seen[v] = true;
        }
        if map[sub.zero()] != sup.zero() {
            return Err(RingError::VerificationFailed(
                "embedding does not preserve zero".into(),
            ));
        }
        if unital && map[sub.one()] != sup.one() {
            return Err(RingError::VerificationFailed(
                "embedding does not map 1 to 1".into(),
            ));
        }
        for a in 0..sub.size() {
            for b in 0..sub.size() {
                if map[sub.add(a, b)] != sup.add(map[a], map[b]) {
                    return Err(RingError::VerificationFailed(format!(
                        "embedding not additive at ({a}, {b})"
                    )));
                }
                if map[sub.mul(a, b)] != sup.mul(map[a], map[b]) {
                    return Err(RingError::VerificationFailed(format!(
                        "embedding not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(RingEmbedding {
            sub,
            sup,
            map,
            unital,
        })
    }

    pub fn sub(&self) -> &FiniteRing {
        &self.sub
    }

    pub fn sup(&self) -> &FiniteRing {
        &self.sup
    }

    pub fn unital(&self) -> bool {
        self.unital
    }

    pub fn image_of(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

/// A unital subring S of R is good when U(R) ∩ S = U(S).
pub fn is_good_subring(embedding: &RingEmbedding) -> Result<bool> {
    if !embedding.unital {
        return Err(RingError::PreconditionFailed(
            "good-subring test requires a unital embedding".into(),
        ));
    }
    let sub_units = analysis::units(embedding.sub());
    let sup_units = analysis::units(embedding.sup());
    Ok((0..embedding.sub.size())
        .all(|a| sub_units.set.contains(a) == sup_units.set.contains(embedding.map[a])))
}

/// Constant embedding of the base ring into a coefficient-vector family
/// (group rings, truncated polynomials, and the pair families): the base
/// element lands in digit 0 and every other digit is the base zero.
pub fn constant_embedding(ring: &FiniteRing) -> Result<RingEmbedding> {
    let (base, len) = match ring.meta() {
        RingMeta::GroupRing { base, group } => {
            // the constructors put the group identity at index 0, which is
            // the digit of weight 1
            if group.identity() != 0 {
                return Err(RingError::PreconditionFailed(
                    "group identity is not at index 0".into(),
                ));
            }
            (base.clone(), group.size())
        }
        RingMeta::PolyQuotient { base, degree } => (base.clone(), *degree),
        RingMeta::PolyPair { base, n, m } => (base.clone(), n + m - 1),
        RingMeta::FreePair { base, n, m } => (base.clone(), n * m),
        RingMeta::Alternating { base, n } => (base.clone(), 2 * n - 2),
        _ => {
            return Err(RingError::PreconditionFailed(
                "no constant embedding for this construction".into(),
            ))
        }
    };
    let codec = super::DigitCodec::new(base.size(), len)?;
    let map: Vec<usize> = (0..base.size())
        .map(|r| {
            let mut digits = vec![base.zero(); len];
            digits[0] = r;
            codec.encode(&digits)
        })
        .collect();
    RingEmbedding::new_verified(base, ring.clone(), map, true)
}

/// Embedding (r, 0) of the base ring into a trivial extension.
pub fn trivext_base_embedding(ring: &FiniteRing) -> Result<RingEmbedding> {
    let (base, module_size) = match ring.meta() {
        RingMeta::TrivialExtension { base, module_size } => (base.clone(), *module_size),
        _ => {
            return Err(RingError::PreconditionFailed(
                "not a trivial extension".into(),
            ))
        }
    };
    // index = r * module_size + m; recover the module zero from the ring zero
    let m0 = ring.zero() % module_size;
    let map: Vec<usize> = (0..base.size()).map(|r| r * module_size + m0).collect();
    RingEmbedding::new_verified(base, ring.clone(), map, true)
}

/// Constant-diagonal embedding of the base ring into T_n(base).
pub fn triangular_scalar_embedding(ring: &FiniteRing) -> Result<RingEmbedding> {
    let (base, n) = match ring.meta() {
        RingMeta::UpperTriangular { base, n } => (base.clone(), *n),
        _ => {
            return Err(RingError::PreconditionFailed(
                "not an upper-triangular matrix ring".into(),
            ))
        }
    };
    let len = n * (n + 1) / 2;
    let map: Vec<usize> = (0..base.size())
        .map(|r| {
            let mut entries = vec![base.zero(); len];
            for i in 0..n {
                entries[tri_pos(n, i, i)] = r;
            }
            triangular_index(&base, n, &entries)
        })
        .collect();
    RingEmbedding::new_verified(base, ring.clone(), map, true)
}

/// The banded copy of R\[x\]/(x^n) inside T_n(R): coefficient vector
/// (c_0, ..., c_{n-1}) maps to the upper-triangular Toeplitz matrix with
/// c_{j-i} at position (i, j). Builds T_n(R) internally.
pub fn poly_banded_embedding(
    poly_ring: &FiniteRing,
    config: &Config,
) -> Result<(RingEmbedding, FiniteRing)> {
    let (base, degree) = match poly_ring.meta() {
        RingMeta::PolyQuotient { base, degree } => (base.clone(), *degree),
        _ => {
            return Err(RingError::PreconditionFailed(
                "not a truncated polynomial ring".into(),
            ))
        }
    };
    let tri = upper_triangular(degree, &base, config)?;
    let len = degree * (degree + 1) / 2;
    let map: Vec<usize> = (0..poly_ring.size())
        .map(|f| {
            let coeffs = poly_coefficients(&base, degree, f);
            let mut entries = vec![base.zero(); len];
            for i in 0..degree {
                for j in i..degree {
                    entries[tri_pos(degree, i, j)] = coeffs[j - i];
                }
            }
            triangular_index(&base, degree, &entries)
        })
        .collect();
    let embedding = RingEmbedding::new_verified(poly_ring.clone(), tri.clone(), map, true)?;
    Ok((embedding, tri))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{
        cyclic, group_ring, poly_quotient, trivial_extension_regular, upper_triangular, zmod,
    };

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn constants_are_good_in_group_rings() {
        let z4 = zmod(4, &cfg()).unwrap();
        let rg = group_ring(&z4, &cyclic(4).unwrap(), &cfg()).unwrap();
        let e = constant_embedding(&rg).unwrap();
        assert!(e.unital());
        assert!(is_good_subring(&e).unwrap());
    }

    #[test]
    fn scalars_are_good_in_triangular_rings() {
        let z4 = zmod(4, &cfg()).unwrap();
        let t2 = upper_triangular(2, &z4, &cfg()).unwrap();
        let e = triangular_scalar_embedding(&t2).unwrap();
        assert!(is_good_subring(&e).unwrap());
    }

    #[test]
    fn trivext_base_is_good() {
        let z8 = zmod(8, &cfg()).unwrap();
        let te = trivial_extension_regular(&z8, &cfg()).unwrap();
        let e = trivext_base_embedding(&te).unwrap();
        assert!(is_good_subring(&e).unwrap());
    }

    #[test]
    fn non_unital_maps_are_rejected() {
        // F2 -> F2 x F2 via a -> (a, 0) does not send 1 to 1
        let f2 = zmod(2, &cfg()).unwrap();
        let p = crate::construct::product(&[f2.clone(), f2.clone()], &cfg()).unwrap();
        let map = vec![0usize, 1]; // (0,0) and (1,0)
        let err = RingEmbedding::new_verified(f2.clone(), p, map, true).unwrap_err();
        assert!(matches!(err, RingError::VerificationFailed(_)));
    }

    #[test]
    fn banded_polynomials_are_good_in_triangular_rings() {
        // exhaustive for every base/degree with |R|^n within the small cap
        let f2 = zmod(2, &cfg()).unwrap();
        let z4 = zmod(4, &cfg()).unwrap();
        for (base, degrees) in [(&f2, vec![2usize, 3, 4]), (&z4, vec![2, 3])] {
            for n in degrees {
                let pq = poly_quotient(base, n, &cfg()).unwrap();
                let (embedding, _tri) = poly_banded_embedding(&pq, &cfg()).unwrap();
                assert!(
                    is_good_subring(&embedding).unwrap(),
                    "base {} degree {n}",
                    base.label()
                );
            }
        }
    }

    #[test]
    fn good_subring_test_requires_unitality() {
        let f2 = zmod(2, &cfg()).unwrap();
        let m2 = crate::construct::matrix_ring(2, &f2, &cfg()).unwrap();
        let e11 = crate::construct::matrix::matrix_index(&f2, 2, &[1, 0, 0, 0]);
        let (_, embedding) = crate::construct::corner(&m2, e11, &cfg()).unwrap();
        assert!(is_good_subring(&embedding).is_err());
    }
}
