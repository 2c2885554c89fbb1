//! The finite-ring kernel.
//!
//! A [`FiniteRing`] is a finite unital ring whose elements are the dense
//! indices `0..size`. Two backends exist: table-backed rings store dense
//! `size x size` addition and multiplication tables; structure-backed rings
//! compute both operations from a construction-specific encoding (coefficient
//! vectors, pairs, cosets, ...). Rings are immutable after construction and
//! cheap to clone; derived data is memoized behind `OnceLock`s, so shared
//! read-only use across threads is safe.

mod axiom;
mod element;
mod meta;
mod subset;

pub use axiom::AxiomKind;
pub use element::Element;
pub use meta::RingMeta;
pub use subset::Subset;

use std::sync::{Arc, OnceLock};

use crate::analysis::RingProfile;
use crate::config::Config;

/// Everything that can go wrong while building or combining rings.
#[derive(Debug, Clone, thiserror::Error)]
pub enum RingError {
    #[error("axiom violation: {kind} witnessed by ({a}, {b}, {c})")]
    AxiomViolation {
        kind: AxiomKind,
        a: usize,
        b: usize,
        c: usize,
    },
    #[error("the one-element ring is rejected by public constructors")]
    ZeroRing,
    #[error("operands belong to different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("size {size} exceeds cap {cap}")]
    SizeCapExceeded { size: u128, cap: usize },
    #[error("element {index} is not idempotent")]
    NotIdempotent { index: usize },
    #[error("the zero idempotent has no corner ring")]
    ZeroIdempotent,
    #[error("not a two-sided ideal: {reason}")]
    NotAnIdeal { reason: String },
    #[error("ring was not constructed as a group ring")]
    NotAGroupRing,
    #[error("map verification failed: {0}")]
    VerificationFailed(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, RingError>;

/// Operations computed from a construction's own encoding rather than from
/// dense tables. Implementations must be total on `0..size`.
pub trait RingStructure: Send + Sync {
    fn size(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
    fn neg(&self, a: usize) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
}

enum Backend {
    Table { add: Vec<u32>, mul: Vec<u32> },
    Structure(Arc<dyn RingStructure>),
}

/// Which backend a ring currently uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendKind {
    Table,
    Structure,
}

impl std::fmt::Display for BackendKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BackendKind::Table => write!(f, "table"),
            BackendKind::Structure => write!(f, "structure"),
        }
    }
}

pub(crate) struct RingInner {
    size: usize,
    zero: usize,
    one: usize,
    label: String,
    backend: Backend,
    neg_table: Vec<u32>,
    meta: RingMeta,
    pub(crate) profile: OnceLock<Arc<RingProfile>>,
    pub(crate) mod_jacobson: OnceLock<FiniteRing>,
}

/// A finite unital ring presented on the index set `0..size`.
#[derive(Clone)]
pub struct FiniteRing {
    inner: Arc<RingInner>,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteRing({}, |R|={})", self.label(), self.size())
    }
}

impl FiniteRing {
    /// Build a table-backed ring from explicit operations and verify the ring
    /// axioms at the size-appropriate tier: exhaustively up to
    /// `config.axiom_cap`, by seeded random triples above it.
    pub fn make_ring(
        size: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: usize,
        one: usize,
        label: impl Into<String>,
        config: &Config,
    ) -> Result<FiniteRing> {
        if size == 1 {
            return Err(RingError::ZeroRing);
        }
        if size == 0 {
            return Err(RingError::InvalidArgument("empty carrier".into()));
        }
        if size as u128 > config.table_cap as u128 {
            return Err(RingError::SizeCapExceeded {
                size: size as u128,
                cap: config.table_cap,
            });
        }
        if zero >= size || one >= size {
            return Err(RingError::InvalidArgument(
                "zero/one index out of range".into(),
            ));
        }
        let mut add_t = vec![0u32; size * size];
        let mut mul_t = vec![0u32; size * size];
        for a in 0..size {
            for b in 0..size {
                let s = add(a, b);
                let p = mul(a, b);
                if s >= size || p >= size {
                    return Err(RingError::InvalidArgument(format!(
                        "operation result out of range at ({a}, {b})"
                    )));
                }
                add_t[a * size + b] = s as u32;
                mul_t[a * size + b] = p as u32;
            }
        }
        FiniteRing::from_tables(
            size,
            add_t,
            mul_t,
            zero,
            one,
            label.into(),
            RingMeta::Opaque,
            config,
        )
    }

    /// Table-backed constructor used by the JSON import and by `make_ring`.
    pub(crate) fn from_tables(
        size: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        label: String,
        meta: RingMeta,
        config: &Config,
    ) -> Result<FiniteRing> {
        if size == 1 {
            return Err(RingError::ZeroRing);
        }
        let neg_table = axiom::build_neg_table_from_table(size, &add, zero)?;
        let ring = FiniteRing {
            inner: Arc::new(RingInner {
                size,
                zero,
                one,
                label,
                backend: Backend::Table { add, mul },
                neg_table,
                meta,
                profile: OnceLock::new(),
                mod_jacobson: OnceLock::new(),
            }),
        };
        axiom::verify_ring_axioms(&ring, config)?;
        Ok(ring)
    }

    /// Wrap a structure backend, verify axioms at the size tier, and return
    /// the ring. The cap argument is the structure cap from the caller's
    /// config (already checked by constructors that know their size formula,
    /// re-checked here as a guard).
    pub(crate) fn from_structure(
        structure: Arc<dyn RingStructure>,
        zero: usize,
        one: usize,
        label: String,
        meta: RingMeta,
        config: &Config,
    ) -> Result<FiniteRing> {
        let size = structure.size();
        if size == 1 {
            return Err(RingError::ZeroRing);
        }
        if size as u128 > config.structure_cap as u128 {
            return Err(RingError::SizeCapExceeded {
                size: size as u128,
                cap: config.structure_cap,
            });
        }
        let mut neg_table = Vec::with_capacity(size);
        for a in 0..size {
            neg_table.push(structure.neg(a) as u32);
        }
        let ring = FiniteRing {
            inner: Arc::new(RingInner {
                size,
                zero,
                one,
                label,
                backend: Backend::Structure(structure),
                neg_table,
                meta,
                profile: OnceLock::new(),
                mod_jacobson: OnceLock::new(),
            }),
        };
        axiom::verify_ring_axioms(&ring, config)?;
        Ok(ring)
    }

    pub fn size(&self) -> usize {
        self.inner.size
    }

    pub fn zero(&self) -> usize {
        self.inner.zero
    }

    pub fn one(&self) -> usize {
        self.inner.one
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn meta(&self) -> &RingMeta {
        &self.inner.meta
    }

    pub fn backend_kind(&self) -> BackendKind {
        match self.inner.backend {
            Backend::Table { .. } => BackendKind::Table,
            Backend::Structure(_) => BackendKind::Structure,
        }
    }

    /// Identity of the underlying ring object (not structural isomorphism).
    pub fn same_ring(&self, other: &FiniteRing) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub(crate) fn profile_cache(&self) -> &OnceLock<Arc<RingProfile>> {
        &self.inner.profile
    }

    pub(crate) fn mod_jacobson_cache(&self) -> &OnceLock<FiniteRing> {
        &self.inner.mod_jacobson
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.inner.size && b < self.inner.size);
        match &self.inner.backend {
            Backend::Table { add, .. } => add[a * self.inner.size + b] as usize,
            Backend::Structure(s) => s.add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.inner.size && b < self.inner.size);
        match &self.inner.backend {
            Backend::Table { mul, .. } => mul[a * self.inner.size + b] as usize,
            Backend::Structure(s) => s.mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        debug_assert!(a < self.inner.size);
        self.inner.neg_table[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `a^k` with `a^0 = 1`.
    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.inner.one;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element(&self, index: usize) -> Element {
        assert!(index < self.inner.size, "element index out of range");
        Element::new(self.clone(), index)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.inner.size
    }

    /// `{x : ax = xa}`. Always contains 0, 1, and every power of `a`.
    pub fn commutant(&self, a: usize) -> Subset {
        Subset::collect(self, |x| self.mul(a, x) == self.mul(x, a))
    }

    /// `{a : ax = xa for all x}`. Always contains 0 and 1.
    pub fn center(&self) -> Subset {
        Subset::collect(self, |a| {
            (0..self.inner.size).all(|x| self.mul(a, x) == self.mul(x, a))
        })
    }

    /// Return a table-backed ring with identical operations, metadata, and
    /// label. Already-table-backed rings are returned as-is. Structure ops
    /// are evaluated on every pair, so the result is bit-exact by
    /// construction.
    pub fn materialize(&self, cap: usize) -> Result<FiniteRing> {
        let n = self.inner.size;
        if n as u128 > cap as u128 {
            return Err(RingError::SizeCapExceeded {
                size: n as u128,
                cap,
            });
        }
        let structure = match &self.inner.backend {
            Backend::Table { .. } => return Ok(self.clone()),
            Backend::Structure(s) => s,
        };
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = structure.add(a, b) as u32;
                mul[a * n + b] = structure.mul(a, b) as u32;
            }
        }
        Ok(FiniteRing {
            inner: Arc::new(RingInner {
                size: n,
                zero: self.inner.zero,
                one: self.inner.one,
                label: self.inner.label.clone(),
                backend: Backend::Table { add, mul },
                neg_table: self.inner.neg_table.clone(),
                meta: self.inner.meta.clone(),
                profile: OnceLock::new(),
                mod_jacobson: OnceLock::new(),
            }),
        })
    }

    /// Same ring contents under a different display label (used where a
    /// construction wants its canonical expression syntax as the label).
    pub(crate) fn relabel(&self, label: String) -> FiniteRing {
        let backend = match &self.inner.backend {
            Backend::Table { add, mul } => Backend::Table {
                add: add.clone(),
                mul: mul.clone(),
            },
            Backend::Structure(s) => Backend::Structure(s.clone()),
        };
        FiniteRing {
            inner: Arc::new(RingInner {
                size: self.inner.size,
                zero: self.inner.zero,
                one: self.inner.one,
                label,
                backend,
                neg_table: self.inner.neg_table.clone(),
                meta: self.inner.meta.clone(),
                profile: OnceLock::new(),
                mod_jacobson: OnceLock::new(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, group_ring, upper_triangular, zmod};

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn make_ring_accepts_modular_tables() {
        let r = FiniteRing::make_ring(
            4,
            |a, b| (a + b) % 4,
            |a, b| (a * b) % 4,
            0,
            1,
            "z4",
            &cfg(),
        )
        .unwrap();
        assert_eq!(r.size(), 4);
        assert_eq!(r.mul(2, 3), 2);
    }

    #[test]
    fn make_ring_rejects_corrupted_multiplication() {
        // mul(2, 2) forced to 1 instead of 0
        let err = FiniteRing::make_ring(
            4,
            |a, b| (a + b) % 4,
            |a, b| if (a, b) == (2, 2) { 1 } else { (a * b) % 4 },
            0,
            1,
            "bad",
            &cfg(),
        )
        .unwrap_err();
        match err {
            RingError::AxiomViolation { kind, .. } => assert!(matches!(
                kind,
                AxiomKind::MulAssociativity
                    | AxiomKind::LeftDistributivity
                    | AxiomKind::RightDistributivity
            )),
            other => panic!("expected an axiom violation, got {other}"),
        }
    }

    #[test]
    fn make_ring_rejects_the_zero_ring() {
        let err = FiniteRing::make_ring(1, |_, _| 0, |_, _| 0, 0, 0, "zero", &cfg()).unwrap_err();
        assert!(matches!(err, RingError::ZeroRing));
    }

    #[test]
    fn element_arithmetic_in_z8() {
        let r = zmod(8, &cfg()).unwrap();
        assert_eq!(r.pow(3, 2), 1);
        assert_eq!(r.sub(1, 3), 6);
        let a = r.element(1);
        let b = r.element(3);
        assert_eq!(a.sub(&b).unwrap().index(), 6);
        assert_eq!(b.pow(2).index(), 1);
        assert_eq!(r.pow(5, 0), 1);
    }

    #[test]
    fn cross_ring_arithmetic_is_rejected() {
        let r = zmod(8, &cfg()).unwrap();
        let s = zmod(8, &cfg()).unwrap();
        let err = r.element(1).add(&s.element(1)).unwrap_err();
        assert!(matches!(err, RingError::RingMismatch { .. }));
    }

    #[test]
    fn matrix_units_multiply_by_the_delta_rule() {
        use crate::construct::matrix::{matrix_index, matrix_ring};
        let f2 = zmod(2, &cfg()).unwrap();
        let m = matrix_ring(2, &f2, &cfg()).unwrap();
        let e12 = matrix_index(&f2, 2, &[0, 1, 0, 0]);
        let e21 = matrix_index(&f2, 2, &[0, 0, 1, 0]);
        let e11 = matrix_index(&f2, 2, &[1, 0, 0, 0]);
        let e22 = matrix_index(&f2, 2, &[0, 0, 0, 1]);
        assert_eq!(m.mul(e12, e21), e11);
        assert_eq!(m.mul(e21, e12), e22);
        assert_eq!(m.mul(e12, e12), m.zero());
    }

    #[test]
    fn center_of_commutative_ring_is_everything() {
        let r = zmod(8, &cfg()).unwrap();
        assert_eq!(r.center().card(), 8);
    }

    #[test]
    fn center_of_2x2_matrices_is_scalars() {
        use crate::construct::matrix::matrix_ring;
        let f2 = zmod(2, &cfg()).unwrap();
        let m = matrix_ring(2, &f2, &cfg()).unwrap();
        let center = m.center();
        // independent oracle: scan all pairs with a hand-rolled 2x2 product
        let mul2 = |a: [u8; 4], b: [u8; 4]| -> [u8; 4] {
            [
                (a[0] * b[0] + a[1] * b[2]) % 2,
                (a[0] * b[1] + a[1] * b[3]) % 2,
                (a[2] * b[0] + a[3] * b[2]) % 2,
                (a[2] * b[1] + a[3] * b[3]) % 2,
            ]
        };
        let decode = |i: usize| -> [u8; 4] {
            [
                (i & 1) as u8,
                ((i >> 1) & 1) as u8,
                ((i >> 2) & 1) as u8,
                ((i >> 3) & 1) as u8,
            ]
        };
        let mut expected = Vec::new();
        for i in 0..16 {
            let a = decode(i);
            if (0..16).all(|j| mul2(a, decode(j)) == mul2(decode(j), a)) {
                expected.push(i);
            }
        }
        assert_eq!(center.to_vec(), expected);
        assert_eq!(center.card(), 2);
    }

    #[test]
    fn center_of_triangular_ring_is_scalars() {
        let f2 = zmod(2, &cfg()).unwrap();
        let t2 = upper_triangular(2, &f2, &cfg()).unwrap();
        assert_eq!(t2.center().card(), 2);
    }

    #[test]
    fn commutant_examples() {
        use crate::construct::matrix::{matrix_index, matrix_ring};
        let f2 = zmod(2, &cfg()).unwrap();
        let m = matrix_ring(2, &f2, &cfg()).unwrap();
        assert_eq!(m.commutant(m.one()).card(), 16);
        let e11 = matrix_index(&f2, 2, &[1, 0, 0, 0]);
        assert_eq!(m.commutant(e11).card(), 4);
        let z8 = zmod(8, &cfg()).unwrap();
        assert_eq!(z8.commutant(5).card(), 8);
    }

    #[test]
    fn commutant_contains_powers_and_center_is_their_intersection() {
        let f2 = zmod(2, &cfg()).unwrap();
        let t2 = upper_triangular(2, &f2, &cfg()).unwrap();
        for a in t2.elements() {
            let c = t2.commutant(a);
            assert!(c.contains(t2.zero()));
            assert!(c.contains(t2.one()));
            let mut p = a;
            for _ in 0..t2.size() {
                assert!(c.contains(p));
                p = t2.mul(p, a);
            }
        }
        let mut intersection = Subset::full(&t2);
        for a in t2.elements() {
            intersection = intersection.intersect(&t2.commutant(a));
        }
        assert_eq!(intersection, t2.center());
    }

    #[test]
    fn materialize_is_bit_exact_and_idempotent() {
        let f2 = zmod(2, &cfg()).unwrap();
        let t3 = upper_triangular(3, &f2, &cfg()).unwrap();
        assert_eq!(t3.backend_kind(), BackendKind::Structure);
        let m = t3.materialize(4096).unwrap();
        assert_eq!(m.backend_kind(), BackendKind::Table);
        for a in 0..t3.size() {
            for b in 0..t3.size() {
                assert_eq!(t3.add(a, b), m.add(a, b));
                assert_eq!(t3.mul(a, b), m.mul(a, b));
            }
        }
        let again = m.materialize(4096).unwrap();
        assert!(again.same_ring(&m));
    }

    #[test]
    fn materialize_respects_the_cap() {
        let z16 = zmod(16, &cfg()).unwrap();
        let c4 = cyclic(4).unwrap();
        let rg = group_ring(&z16, &c4, &cfg()).unwrap();
        assert_eq!(rg.size(), 65536);
        let err = rg.materialize(4096).unwrap_err();
        assert!(matches!(err, RingError::SizeCapExceeded { .. }));
    }

    #[test]
    fn randomized_axiom_tier_accepts_large_rings() {
        // 65536 elements sits far above the exhaustive cap
        let z16 = zmod(16, &cfg()).unwrap();
        let c4 = cyclic(4).unwrap();
        let rg = group_ring(&z16, &c4, &cfg()).unwrap();
        assert_eq!(rg.backend_kind(), BackendKind::Structure);
    }
}
