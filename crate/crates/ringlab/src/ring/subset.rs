//! Membership masks over a ring's element indices.
//!
//! Every derived set (units, idempotents, nilpotents, radical,
//! quasinilpotents, center, ideals, ...) is a `Subset`: a bit mask of
//! length `ring.size()`. Membership tests are O(1) and sweeps are
//! cache-friendly.

use crate::ring::FiniteRing;

#[derive(Clone)]
pub struct Subset {
    ring: FiniteRing,
    bits: Vec<u64>,
}

impl Subset {
    pub fn empty(ring: &FiniteRing) -> Self {
        let words = ring.size().div_ceil(64);
        Subset {
            ring: ring.clone(),
            bits: vec![0u64; words],
        }
    }

    pub fn full(ring: &FiniteRing) -> Self {
        let mut s = Subset::empty(ring);
        for i in 0..ring.size() {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(ring: &FiniteRing, indices: I) -> Self {
        let mut s = Subset::empty(ring);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Collect the elements satisfying `pred`.
    pub fn collect<F: FnMut(usize) -> bool>(ring: &FiniteRing, mut pred: F) -> Self {
        let mut s = Subset::empty(ring);
        for i in 0..ring.size() {
            if pred(i) {
                s.insert(i);
            }
        }
        s
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < self.ring.size());
        self.bits[index / 64] |= 1u64 << (index % 64);
    }

    pub fn remove(&mut self, index: usize) {
        debug_assert!(index < self.ring.size());
        self.bits[index / 64] &= !(1u64 << (index % 64));
    }

    pub fn contains(&self, index: usize) -> bool {
        debug_assert!(index < self.ring.size());
        self.bits[index / 64] & (1u64 << (index % 64)) != 0
    }

    pub fn card(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|w| *w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.ring.size();
        (0..n).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersect(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn minus(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Subset {
        let mut out = Subset::full(&self.ring);
        for (w, s) in out.bits.iter_mut().zip(self.bits.iter()) {
            *w &= !s;
        }
        out
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        debug_assert!(self.ring.same_ring(&other.ring));
        self.bits
            .iter()
            .zip(other.bits.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Subset) -> bool {
        self.bits
            .iter()
            .zip(other.bits.iter())
            .all(|(a, b)| a & b == 0)
    }

    fn zip_with<F: Fn(u64, u64) -> u64>(&self, other: &Subset, f: F) -> Subset {
        debug_assert!(self.ring.same_ring(&other.ring));
        Subset {
            ring: self.ring.clone(),
            bits: self
                .bits
                .iter()
                .zip(other.bits.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.bits == other.bits
    }
}

impl Eq for Subset {}

impl std::fmt::Debug for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let card = self.card();
        if card <= 32 {
            write!(f, "Subset{:?}", self.to_vec())
        } else {
            write!(f, "Subset[|{}| of {}]", card, self.ring.size())
        }
    }
}
