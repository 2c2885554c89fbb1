//! Ring-axiom verification.
//!
//! Up to `config.axiom_cap` elements every axiom is checked exhaustively
//! (O(n^3) triples). Above the cap a fixed-seed sample of triples is
//! checked instead; the seed is logged by reports.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{FiniteRing, Result, RingError};
use crate::config::Config;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomKind {
    AddAssociativity,
    AddCommutativity,
    AddIdentity,
    AddInverse,
    MulAssociativity,
    MulIdentity,
    LeftDistributivity,
    RightDistributivity,
}

impl std::fmt::Display for AxiomKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            AxiomKind::AddAssociativity => "additive associativity",
            AxiomKind::AddCommutativity => "additive commutativity",
            AxiomKind::AddIdentity => "additive identity",
            AxiomKind::AddInverse => "additive inverse",
            AxiomKind::MulAssociativity => "multiplicative associativity",
            AxiomKind::MulIdentity => "multiplicative identity",
            AxiomKind::LeftDistributivity => "left distributivity",
            AxiomKind::RightDistributivity => "right distributivity",
        };
        write!(f, "{name}")
    }
}

/// Negation table for a table backend; fails with `AddInverse` if some row
/// of the addition table never reaches zero.
pub(crate) fn build_neg_table_from_table(
    size: usize,
    add: &[u32],
    zero: usize,
) -> Result<Vec<u32>> {
    let mut neg = vec![0u32; size];
    for a in 0..size {
        let mut found = None;
        for b in 0..size {
            if add[a * size + b] as usize == zero {
                found = Some(b as u32);
                break;
            }
        }
        match found {
            Some(b) => neg[a] = b,
            None => {
                return Err(RingError::AxiomViolation {
                    kind: AxiomKind::AddInverse,
                    a,
                    b: 0,
                    c: 0,
                })
            }
        }
    }
    Ok(neg)
}

/// Operation lookups used by the verifier. In the exhaustive tier the ops of
/// a structure-backed ring are copied into scratch tables first, so the
/// O(n^3) scan runs on O(1) lookups; in the sampled tier ops are called
/// directly.
enum OpView<'r> {
    Tables {
        size: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
    },
    Direct(&'r FiniteRing),
}

impl<'r> OpView<'r> {
    fn scratch(ring: &'r FiniteRing) -> OpView<'r> {
        let n = ring.size();
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ring.add(a, b) as u32;
                mul[a * n + b] = ring.mul(a, b) as u32;
            }
        }
        OpView::Tables { size: n, add, mul }
    }

    #[inline]
    fn add(&self, a: usize, b: usize) -> usize {
        match self {
            OpView::Tables { size, add, .. } => add[a * size + b] as usize,
            OpView::Direct(r) => r.add(a, b),
        }
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            OpView::Tables { size, mul, .. } => mul[a * size + b] as usize,
            OpView::Direct(r) => r.mul(a, b),
        }
    }
}

fn check_triple(v: &OpView, a: usize, b: usize, c: usize) -> Result<()> {
    let fail = |kind| Err(RingError::AxiomViolation { kind, a, b, c });
    if v.add(v.add(a, b), c) != v.add(a, v.add(b, c)) {
        return fail(AxiomKind::AddAssociativity);
    }
    if v.mul(v.mul(a, b), c) != v.mul(a, v.mul(b, c)) {
        return fail(AxiomKind::MulAssociativity);
    }
    if v.mul(a, v.add(b, c)) != v.add(v.mul(a, b), v.mul(a, c)) {
        return fail(AxiomKind::LeftDistributivity);
    }
    if v.mul(v.add(a, b), c) != v.add(v.mul(a, c), v.mul(b, c)) {
        return fail(AxiomKind::RightDistributivity);
    }
    Ok(())
}

fn check_pair(v: &OpView, a: usize, b: usize) -> Result<()> {
    if v.add(a, b) != v.add(b, a) {
        return Err(RingError::AxiomViolation {
            kind: AxiomKind::AddCommutativity,
            a,
            b,
            c: 0,
        });
    }
    Ok(())
}

fn check_unary(ring: &FiniteRing, v: &OpView, a: usize) -> Result<()> {
    let zero = ring.zero();
    let one = ring.one();
    if v.add(a, zero) != a || v.add(zero, a) != a {
        return Err(RingError::AxiomViolation {
            kind: AxiomKind::AddIdentity,
            a,
            b: zero,
            c: 0,
        });
    }
    if v.mul(a, one) != a || v.mul(one, a) != a {
        return Err(RingError::AxiomViolation {
            kind: AxiomKind::MulIdentity,
            a,
            b: one,
            c: 0,
        });
    }
    if v.add(a, ring.neg(a)) != zero {
        return Err(RingError::AxiomViolation {
            kind: AxiomKind::AddInverse,
            a,
            b: ring.neg(a),
            c: 0,
        });
    }
    Ok(())
}

pub(crate) fn verify_ring_axioms(ring: &FiniteRing, config: &Config) -> Result<()> {
    let n = ring.size();
    if n <= config.axiom_cap {
        let v = OpView::scratch(ring);
        for a in 0..n {
            check_unary(ring, &v, a)?;
        }
        for a in 0..n {
            for b in 0..n {
                check_pair(&v, a, b)?;
                for c in 0..n {
                    check_triple(&v, a, b, c)?;
                }
            }
        }
    } else {
        let v = OpView::Direct(ring);
        for a in 0..n {
            check_unary(ring, &v, a)?;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        for _ in 0..config.axiom_samples {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            let c = rng.random_range(0..n);
            check_pair(&v, a, b)?;
            check_triple(&v, a, b, c)?;
        }
    }
    Ok(())
}
