//! Checked element handles. Sweeps work on raw indices; `Element` is the
//! convenience wrapper that carries its ring and rejects cross-ring
//! arithmetic.

use super::{FiniteRing, Result, RingError};

#[derive(Clone)]
pub struct Element {
    ring: FiniteRing,
    index: usize,
}

impl Element {
    pub(crate) fn new(ring: FiniteRing, index: usize) -> Element {
        Element { ring, index }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn index(&self) -> usize {
        self.index
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(RingError::RingMismatch {
                left: self.ring.label().to_string(),
                right: other.ring.label().to_string(),
            })
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(Element::new(
            self.ring.clone(),
            self.ring.add(self.index, other.index),
        ))
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(Element::new(
            self.ring.clone(),
            self.ring.sub(self.index, other.index),
        ))
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(Element::new(
            self.ring.clone(),
            self.ring.mul(self.index, other.index),
        ))
    }

    pub fn neg(&self) -> Element {
        Element::new(self.ring.clone(), self.ring.neg(self.index))
    }

    /// `self^k` with the empty product equal to one.
    pub fn pow(&self, k: u64) -> Element {
        Element::new(self.ring.clone(), self.ring.pow(self.index, k))
    }

    pub fn is_zero(&self) -> bool {
        self.index == self.ring.zero()
    }

    pub fn is_one(&self) -> bool {
        self.index == self.ring.one()
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.index == other.index
    }
}

impl Eq for Element {}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}#{}", self.ring.label(), self.index)
    }
}
