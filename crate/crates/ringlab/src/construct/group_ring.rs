//! Group rings RG: coefficient vectors indexed by group elements, with
//! multiplication by convolution over the Cayley table.

use std::sync::Arc;

use super::group::FiniteGroup;
use super::{checked_pow_size, DigitCodec, MAX_DIGITS};
use crate::config::Config;
use crate::ring::{FiniteRing, Result, RingMeta, RingStructure};

pub(crate) struct GroupRingStructure {
    base: FiniteRing,
    group: FiniteGroup,
    codec: DigitCodec,
    size: usize,
}

impl RingStructure for GroupRingStructure {
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
        let k = self.group.size();
        let mut da = [0usize; MAX_DIGITS];
        let mut db = [0usize; MAX_DIGITS];
        let mut out = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        self.codec.decode(b, &mut db);
        let zero = self.base.zero();
        for o in out.iter_mut().take(k) {
            *o = zero;
        }
        for g in 0..k {
            if da[g] == zero {
                continue;
            }
            for h in 0..k {
                let gh = self.group.op(g, h);
                out[gh] = self.base.add(out[gh], self.base.mul(da[g], db[h]));
            }
        }
        self.codec.encode(&out)
    }
}

/// The group ring RG, structure-backed; coefficient digit i belongs to group
/// element i.
pub fn group_ring(base: &FiniteRing, group: &FiniteGroup, config: &Config) -> Result<FiniteRing> {
    let size = checked_pow_size(base.size(), group.size() as u32, config.structure_cap)?;
    let codec = DigitCodec::new(base.size(), group.size())?;
    let structure = GroupRingStructure {
        base: base.clone(),
        group: group.clone(),
        codec,
        size,
    };
    let mut digits = [0usize; MAX_DIGITS];
    for d in digits.iter_mut().take(group.size()) {
        *d = base.zero();
    }
    let zero = codec.encode(&digits);
    digits[group.identity()] = base.one();
    let one = codec.encode(&digits);
    FiniteRing::from_structure(
        Arc::new(structure),
        zero,
        one,
        format!("groupring({}, {})", base.label(), group.label()),
        RingMeta::GroupRing {
            base: base.clone(),
            group: group.clone(),
        },
        config,
    )
}

/// Coefficient vector (indexed by group element) of a group-ring element.
pub fn group_ring_coefficients(base: &FiniteRing, group: &FiniteGroup, index: usize) -> Vec<usize> {
    let codec =
        DigitCodec::new(base.size(), group.size()).expect("group size checked at construction");
    let mut d = [0usize; MAX_DIGITS];
    codec.decode(index, &mut d);
    d[..group.size()].to_vec()
}

/// Encode a coefficient vector into a group-ring element index.
pub fn group_ring_index(base: &FiniteRing, group: &FiniteGroup, coeffs: &[usize]) -> usize {
    let codec =
        DigitCodec::new(base.size(), group.size()).expect("group size checked at construction");
    codec.encode(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, quaternion8, zmod};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn group_ring_sizes() {
        let f2 = zmod(2, &cfg()).unwrap();
        let z4 = zmod(4, &cfg()).unwrap();
        assert_eq!(
            group_ring(&f2, &cyclic(2).unwrap(), &cfg()).unwrap().size(),
            4
        );
        assert_eq!(
            group_ring(&f2, &cyclic(3).unwrap(), &cfg()).unwrap().size(),
            8
        );
        assert_eq!(
            group_ring(&z4, &cyclic(2).unwrap(), &cfg()).unwrap().size(),
            16
        );
    }

    /// Naive convolution over decode/encode, written independently of the
    /// structure backend's accumulation loop.
    fn naive_convolution(
        base: &crate::ring::FiniteRing,
        group: &FiniteGroup,
        f: usize,
        g: usize,
    ) -> usize {
        let a = group_ring_coefficients(base, group, f);
        let b = group_ring_coefficients(base, group, g);
        let mut out = vec![base.zero(); group.size()];
        for (i, &ca) in a.iter().enumerate() {
            for (j, &cb) in b.iter().enumerate() {
                let k = group.op(i, j);
                out[k] = base.add(out[k], base.mul(ca, cb));
            }
        }
        group_ring_index(base, group, &out)
    }

    #[test]
    fn convolution_matches_the_naive_oracle_on_seeded_samples() {
        let f2 = zmod(2, &cfg()).unwrap();
        let z4 = zmod(4, &cfg()).unwrap();
        let cases = [
            group_ring(&f2, &quaternion8().unwrap(), &cfg()).unwrap(),
            group_ring(&z4, &cyclic(4).unwrap(), &cfg()).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for ring in &cases {
            let (base, group) = match ring.meta() {
                crate::ring::RingMeta::GroupRing { base, group } => (base.clone(), group.clone()),
                _ => unreachable!(),
            };
            for _ in 0..1000 {
                let f = rng.random_range(0..ring.size());
                let g = rng.random_range(0..ring.size());
                assert_eq!(ring.mul(f, g), naive_convolution(&base, &group, f, g));
            }
        }
    }
}
