//! Full and upper-triangular matrix rings over a finite base ring.
//!
//! Elements are coefficient vectors over the base: row-major for full
//! matrices, row-major over positions (i, j) with i <= j for triangular
//! ones. Both are structure-backed so that e.g. 3 x 3 matrices over a
//! 4-element base (size 4^9) stay usable without dense tables.

use std::sync::Arc;

use super::{checked_pow_size, DigitCodec, MAX_DIGITS};
use crate::config::Config;
use crate::ring::{FiniteRing, Result, RingError, RingMeta, RingStructure};

pub(crate) struct MatrixStructure {
    base: FiniteRing,
    n: usize,
    codec: DigitCodec,
    size: usize,
}

impl RingStructure for MatrixStructure {
    fn size(&self) -> usize {
        self.size
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let mut da = [0usize; MAX_DIGITS];
        let mut db = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        self.codec.decode(b, &mut db);
        for i in 0..self.codec.len {
            da[i] = self.base.add(da[i], db[i]);
        }
        self.codec.encode(&da)
    }

    fn neg(&self, a: usize) -> usize {
        let mut da = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        for d in da.iter_mut().take(self.codec.len) {
            *d = self.base.neg(*d);
        }
        self.codec.encode(&da)
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.n;
        let mut da = [0usize; MAX_DIGITS];
        let mut db = [0usize; MAX_DIGITS];
        let mut out = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        self.codec.decode(b, &mut db);
        let zero = self.base.zero();
        for i in 0..n {
            for j in 0..n {
                let mut acc = zero;
                for k in 0..n {
                    acc = self
                        .base
                        .add(acc, self.base.mul(da[i * n + k], db[k * n + j]));
                }
                out[i * n + j] = acc;
            }
        }
        self.codec.encode(&out)
    }
}

/// The full n x n matrix ring over `base`.
pub fn matrix_ring(n: usize, base: &FiniteRing, config: &Config) -> Result<FiniteRing> {
    if n == 0 {
        return Err(RingError::InvalidArgument("matrix dimension 0".into()));
    }
    let len = n * n;
    let size = checked_pow_size(base.size(), len as u32, config.structure_cap)?;
    let codec = DigitCodec::new(base.size(), len)?;
    let structure = MatrixStructure {
        base: base.clone(),
        n,
        codec,
        size,
    };
    let mut digits = [0usize; MAX_DIGITS];
    for d in digits.iter_mut().take(len) {
        *d = base.zero();
    }
    let zero = codec.encode(&digits);
    for i in 0..n {
        digits[i * n + i] = base.one();
    }
    let one = codec.encode(&digits);
    FiniteRing::from_structure(
        Arc::new(structure),
        zero,
        one,
        format!("M({n}, {})", base.label()),
        RingMeta::Matrix {
            base: base.clone(),
            n,
        },
        config,
    )
}

/// Position index of entry (i, j), i <= j, in the packed upper triangle.
#[inline]
pub(crate) fn tri_pos(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * n - i * (i + 1) / 2 + j
}

pub(crate) struct UpperTriangularStructure {
    base: FiniteRing,
    n: usize,
    codec: DigitCodec,
    size: usize,
}

impl RingStructure for UpperTriangularStructure {
    fn size(&self) -> usize {
        self.size
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let mut da = [0usize; MAX_DIGITS];
        let mut db = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        self.codec.decode(b, &mut db);
        for i in 0..self.codec.len {
            da[i] = self.base.add(da[i], db[i]);
        }
        self.codec.encode(&da)
    }

    fn neg(&self, a: usize) -> usize {
        let mut da = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        for d in da.iter_mut().take(self.codec.len) {
            *d = self.base.neg(*d);
        }
        self.codec.encode(&da)
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.n;
        let mut da = [0usize; MAX_DIGITS];
        let mut db = [0usize; MAX_DIGITS];
        let mut out = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        self.codec.decode(b, &mut db);
        let zero = self.base.zero();
        for i in 0..n {
            for j in i..n {
                let mut acc = zero;
                for k in i..=j {
                    acc = self.base.add(
                        acc,
                        self.base.mul(da[tri_pos(n, i, k)], db[tri_pos(n, k, j)]),
                    );
                }
                out[tri_pos(n, i, j)] = acc;
            }
        }
        self.codec.encode(&out)
    }
}

/// The ring of upper-triangular n x n matrices over `base`.
pub fn upper_triangular(n: usize, base: &FiniteRing, config: &Config) -> Result<FiniteRing> {
    if n == 0 {
        return Err(RingError::InvalidArgument("matrix dimension 0".into()));
    }
    let len = n * (n + 1) / 2;
    let size = checked_pow_size(base.size(), len as u32, config.structure_cap)?;
    let codec = DigitCodec::new(base.size(), len)?;
    let structure = UpperTriangularStructure {
        base: base.clone(),
        n,
        codec,
        size,
    };
    let mut digits = [0usize; MAX_DIGITS];
    for d in digits.iter_mut().take(len) {
        *d = base.zero();
    }
    let zero = codec.encode(&digits);
    for i in 0..n {
        digits[tri_pos(n, i, i)] = base.one();
    }
    let one = codec.encode(&digits);
    FiniteRing::from_structure(
        Arc::new(structure),
        zero,
        one,
        format!("T({n}, {})", base.label()),
        RingMeta::UpperTriangular {
            base: base.clone(),
            n,
        },
        config,
    )
}

/// Decode a matrix-ring element into its row-major entries.
pub fn matrix_entries(base: &FiniteRing, n: usize, index: usize) -> Vec<usize> {
    let codec = DigitCodec::new(base.size(), n * n).expect("dimension checked at construction");
    let mut d = [0usize; MAX_DIGITS];
    codec.decode(index, &mut d);
    d[..n * n].to_vec()
}

/// Encode row-major entries into a matrix-ring element index.
pub fn matrix_index(base: &FiniteRing, n: usize, entries: &[usize]) -> usize {
    let codec = DigitCodec::new(base.size(), n * n).expect("dimension checked at construction");
    codec.encode(entries)
}

/// Diagonal entries of an upper-triangular element.
pub fn triangular_diagonal(base: &FiniteRing, n: usize, index: usize) -> Vec<usize> {
    let codec =
        DigitCodec::new(base.size(), n * (n + 1) / 2).expect("dimension checked at construction");
    let mut d = [0usize; MAX_DIGITS];
    codec.decode(index, &mut d);
    (0..n).map(|i| d[tri_pos(n, i, i)]).collect()
}

/// Packed upper-triangle entries of a triangular element.
pub fn triangular_entries(base: &FiniteRing, n: usize, index: usize) -> Vec<usize> {
    let len = n * (n + 1) / 2;
    let codec = DigitCodec::new(base.size(), len).expect("dimension checked at construction");
    let mut d = [0usize; MAX_DIGITS];
    codec.decode(index, &mut d);
    d[..len].to_vec()
}

/// Encode packed upper-triangle entries into a triangular element index.
pub fn triangular_index(base: &FiniteRing, n: usize, entries: &[usize]) -> usize {
    let len = n * (n + 1) / 2;
    let codec = DigitCodec::new(base.size(), len).expect("dimension checked at construction");
    codec.encode(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::zmod;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn matrix_ring_sizes() {
        let f2 = zmod(2, &cfg()).unwrap();
        assert_eq!(matrix_ring(2, &f2, &cfg()).unwrap().size(), 16);
        let z4 = zmod(4, &cfg()).unwrap();
        assert_eq!(matrix_ring(2, &z4, &cfg()).unwrap().size(), 256);
    }

    #[test]
    fn one_by_one_matrices_look_like_the_base() {
        let z4 = zmod(4, &cfg()).unwrap();
        let m1 = matrix_ring(1, &z4, &cfg()).unwrap();
        assert_eq!(m1.size(), 4);
        let iso = crate::construct::brute_force_isomorphic(&m1, &z4, &cfg()).unwrap();
        assert!(iso.is_some());
    }

    #[test]
    fn triangular_sizes() {
        let f2 = zmod(2, &cfg()).unwrap();
        assert_eq!(upper_triangular(2, &f2, &cfg()).unwrap().size(), 8);
        assert_eq!(upper_triangular(3, &f2, &cfg()).unwrap().size(), 64);
    }

    #[test]
    fn triangular_diagonal_decodes() {
        let f2 = zmod(2, &cfg()).unwrap();
        let t2 = upper_triangular(2, &f2, &cfg()).unwrap();
        let diag_one = triangular_diagonal(&f2, 2, t2.one());
        assert_eq!(diag_one, vec![1, 1]);
        let diag_zero = triangular_diagonal(&f2, 2, t2.zero());
        assert_eq!(diag_zero, vec![0, 0]);
    }

    #[test]
    fn size_caps_are_enforced() {
        let z4 = zmod(4, &cfg()).unwrap();
        // 4^16 far exceeds the structure cap
        assert!(matrix_ring(4, &z4, &cfg()).is_err());
    }
}
