//! Constructors for every ring family the workbench knows about, plus
//! embeddings, explicit family isomorphisms, and a brute-force isomorphism
//! search for tiny rings.

pub mod base;
pub mod bimodule;
pub mod corner;
pub mod embed;
pub mod families;
pub mod group;
pub mod group_ring;
pub mod ideal;
pub mod iso;
pub mod matrix;
pub mod poly;

pub use base::{product, zmod};
pub use bimodule::{formal_triangular, trivial_extension, trivial_extension_regular, Bimodule};
pub use corner::corner;
pub use embed::{is_good_subring, RingEmbedding};
pub use families::{a_ring, b_ring, c_ring, s_ring, t_ring, u_ring};
pub use group::{cyclic, dihedral, group_product, quaternion8, FiniteGroup};
pub use group_ring::group_ring;
pub use ideal::{ideal_generated, quotient_ring};
pub use iso::{brute_force_isomorphic, family_iso, FamilyIsoKind, RingIso};
pub use matrix::{matrix_ring, upper_triangular};
pub use poly::poly_quotient;

use crate::ring::{Result, RingError};

/// Checked size computation `base^exp` against a cap. Rejects overflow and
/// anything above the cap before any allocation happens.
pub(crate) fn checked_pow_size(base: usize, exp: u32, cap: usize) -> Result<usize> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc
            .checked_mul(base as u128)
            .ok_or(RingError::SizeCapExceeded {
                size: u128::MAX,
                cap,
            })?;
        if acc > cap as u128 {
            return Err(RingError::SizeCapExceeded { size: acc, cap });
        }
    }
    Ok(acc as usize)
}

/// Little-endian positional codec with a uniform radix; every coefficient
/// encoding in the crate uses this layout (digit 0 has weight 1).
#[derive(Clone, Copy)]
pub(crate) struct DigitCodec {
    pub radix: usize,
    pub len: usize,
}

pub(crate) const MAX_DIGITS: usize = 32;

impl DigitCodec {
    pub fn new(radix: usize, len: usize) -> Result<DigitCodec> {
        if len > MAX_DIGITS {
            return Err(RingError::InvalidArgument(format!(
                "coefficient vector of length {len} exceeds the supported maximum {MAX_DIGITS}"
            )));
        }
        Ok(DigitCodec { radix, len })
    }

    #[inline]
    pub fn decode(&self, mut index: usize, out: &mut [usize]) {
        for d in out.iter_mut().take(self.len) {
            *d = index % self.radix;
            index /= self.radix;
        }
    }

    #[inline]
    pub fn encode(&self, digits: &[usize]) -> usize {
        let mut acc = 0usize;
        for &d in digits[..self.len].iter().rev() {
            acc = acc * self.radix + d;
        }
        acc
    }
}
