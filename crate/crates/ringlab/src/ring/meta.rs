//! Construction metadata carried by every ring.
//!
//! Structural claims (product laws, diagonal shapes of triangular rings,
//! group-ring statements, family isomorphisms) need to know how a ring was
//! built and how its indices decode. The metadata survives
//! [`materialize`](super::FiniteRing::materialize), so analysis on a
//! table-backed copy can still decode elements.

use super::FiniteRing;
use crate::construct::group::FiniteGroup;

#[derive(Clone)]
pub enum RingMeta {
    /// No structural information (hand-made tables, JSON imports).
    Opaque,
    /// Integers modulo `modulus`; index = residue.
    Zmod { modulus: u64 },
    /// Direct product; index is little-endian mixed-radix over the factors.
    Product { factors: Vec<FiniteRing> },
    /// Full n x n matrices over `base`; digits row-major.
    Matrix { base: FiniteRing, n: usize },
    /// Upper-triangular n x n matrices over `base`; digits row-major over
    /// the positions (i, j) with i <= j.
    UpperTriangular { base: FiniteRing, n: usize },
    /// Pairs (r, m); index = r * module_size + m.
    TrivialExtension {
        base: FiniteRing,
        module_size: usize,
    },
    /// Triples (r, n, s); index = (r * module_size + n) * |S| + s.
    FormalTriangular {
        left: FiniteRing,
        right: FiniteRing,
        module_size: usize,
    },
    /// Truncated polynomials of length `degree`; digits are coefficients,
    /// constant term first.
    PolyQuotient { base: FiniteRing, degree: usize },
    /// Group ring; digits are coefficients indexed by group element.
    GroupRing {
        base: FiniteRing,
        group: FiniteGroup,
    },
    /// Commuting pair family: head, then n-1 x-coefficients, then m-1
    /// y-coefficients.
    PolyPair {
        base: FiniteRing,
        n: usize,
        m: usize,
    },
    /// Noncommuting pair family: digits a_{i,j} at i*n + j (y-degree i,
    /// x-degree j).
    FreePair {
        base: FiniteRing,
        n: usize,
        m: usize,
    },
    /// Alternating-word family: head, y-started words by length, x-started
    /// words by length.
    Alternating { base: FiniteRing, n: usize },
    /// Block pair of upper-triangular Toeplitz matrices (matrix form of the
    /// commuting pair family).
    ToeplitzPair {
        base: FiniteRing,
        n: usize,
        m: usize,
    },
    /// Toeplitz blocks plus a free upper-right grid (matrix form of the
    /// noncommuting pair family).
    ToeplitzGrid {
        base: FiniteRing,
        n: usize,
        m: usize,
    },
    /// Single triangular matrix with two interleaved band families (matrix
    /// form of the alternating-word family).
    ToeplitzInterleaved { base: FiniteRing, n: usize },
    /// Corner ring e R e.
    Corner {
        ambient: FiniteRing,
        idempotent: usize,
    },
    /// Quotient by a two-sided ideal.
    Quotient {
        ambient: FiniteRing,
        ideal: Vec<usize>,
    },
}

impl RingMeta {
    /// The base ring the construction was applied to, when there is a single
    /// natural one.
    pub fn base(&self) -> Option<&FiniteRing> {
        match self {
            RingMeta::Matrix { base, .. }
            | RingMeta::UpperTriangular { base, .. }
            | RingMeta::TrivialExtension { base, .. }
            | RingMeta::PolyQuotient { base, .. }
            | RingMeta::GroupRing { base, .. }
            | RingMeta::PolyPair { base, .. }
            | RingMeta::FreePair { base, .. }
            | RingMeta::Alternating { base, .. }
            | RingMeta::ToeplitzPair { base, .. }
            | RingMeta::ToeplitzGrid { base, .. }
            | RingMeta::ToeplitzInterleaved { base, .. } => Some(base),
            _ => None,
        }
    }
}

impl std::fmt::Debug for RingMeta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            RingMeta::Opaque => "Opaque",
            RingMeta::Zmod { .. } => "Zmod",
            RingMeta::Product { .. } => "Product",
            RingMeta::Matrix { .. } => "Matrix",
            RingMeta::UpperTriangular { .. } => "UpperTriangular",
            RingMeta::TrivialExtension { .. } => "TrivialExtension",
            RingMeta::FormalTriangular { .. } => "FormalTriangular",
            RingMeta::PolyQuotient { .. } => "PolyQuotient",
            RingMeta::GroupRing { .. } => "GroupRing",
            RingMeta::PolyPair { .. } => "PolyPair",
            RingMeta::FreePair { .. } => "FreePair",
            RingMeta::Alternating { .. } => "Alternating",
            RingMeta::ToeplitzPair { .. } => "ToeplitzPair",
            RingMeta::ToeplitzGrid { .. } => "ToeplitzGrid",
            RingMeta::ToeplitzInterleaved { .. } => "ToeplitzInterleaved",
            RingMeta::Corner { .. } => "Corner",
            RingMeta::Quotient { .. } => "Quotient",
        };
        write!(f, "{name}")
    }
}
