//! Modular rings and finite direct products.

use std::sync::Arc;

use crate::config::Config;
use crate::ring::{FiniteRing, Result, RingError, RingMeta, RingStructure};

/// Z/nZ with index = residue; table-backed.
pub fn zmod(n: u64, config: &Config) -> Result<FiniteRing> {
    if n < 2 {
        return Err(RingError::InvalidArgument(format!(
            "modulus must be at least 2, got {n}"
        )));
    }
    if n as u128 > config.table_cap as u128 {
        return Err(RingError::SizeCapExceeded {
            size: n as u128,
            cap: config.table_cap,
        });
    }
    let nn = n as usize;
    let mut add = vec![0u32; nn * nn];
    let mut mul = vec![0u32; nn * nn];
    for a in 0..nn {
        for b in 0..nn {
            add[a * nn + b] = ((a + b) % nn) as u32;
            mul[a * nn + b] = ((a * b) % nn) as u32;
        }
    }
    let label = if n == 2 {
        "F2".to_string()
    } else {
        format!("Zmod({n})")
    };
    FiniteRing::from_tables(
        nn,
        add,
        mul,
        0,
        1,
        label,
        RingMeta::Zmod { modulus: n },
        config,
    )
}

struct ProductStructure {
    factors: Vec<FiniteRing>,
    sizes: Vec<usize>,
    size: usize,
}

impl ProductStructure {
    #[inline]
    fn split(&self, index: usize) -> impl Iterator<Item = (usize, &FiniteRing)> + '_ {
        let mut rest = index;
        self.factors
            .iter()
            .zip(self.sizes.iter())
            .map(move |(f, &s)| {
                let d = rest % s;
                rest /= s;
                (d, f)
            })
    }

    fn join(&self, digits: impl Iterator<Item = usize>) -> usize {
        let mut acc = 0usize;
        let mut weight = 1usize;
        for (d, s) in digits.zip(self.sizes.iter()) {
            acc += d * weight;
            weight *= s;
        }
        acc
    }
}

impl RingStructure for ProductStructure {
    fn size(&self) -> usize {
        self.size
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let parts: Vec<usize> = self
            .split(a)
            .zip(self.split(b))
            .map(|((x, f), (y, _))| f.add(x, y))
            .collect();
        self.join(parts.into_iter())
    }

    fn neg(&self, a: usize) -> usize {
        let parts: Vec<usize> = self.split(a).map(|(x, f)| f.neg(x)).collect();
        self.join(parts.into_iter())
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let parts: Vec<usize> = self
            .split(a)
            .zip(self.split(b))
            .map(|((x, f), (y, _))| f.mul(x, y))
            .collect();
        self.join(parts.into_iter())
    }
}

/// Componentwise direct product with little-endian mixed-radix indices
/// (factor 0 is the least significant digit).
pub fn product(factors: &[FiniteRing], config: &Config) -> Result<FiniteRing> {
    if factors.is_empty() {
        return Err(RingError::InvalidArgument(
            "product of zero factors is rejected".into(),
        ));
    }
    let mut size: u128 = 1;
    for f in factors {
        size = size
            .checked_mul(f.size() as u128)
            .ok_or(RingError::SizeCapExceeded {
                size: u128::MAX,
                cap: config.structure_cap,
            })?;
    }
    if size > config.structure_cap as u128 {
        return Err(RingError::SizeCapExceeded {
            size,
            cap: config.structure_cap,
        });
    }
    let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
    let structure = ProductStructure {
        factors: factors.to_vec(),
        sizes,
        size: size as usize,
    };
    let zero = structure.join(factors.iter().map(|f| f.zero()));
    let one = structure.join(factors.iter().map(|f| f.one()));
    let label = format!(
        "product({})",
        factors
            .iter()
            .map(|f| f.label())
            .collect::<Vec<_>>()
            .join(", ")
    );
    FiniteRing::from_structure(
        Arc::new(structure),
        zero,
        one,
        label,
        RingMeta::Product {
            factors: factors.to_vec(),
        },
        config,
    )
}

/// Decode a product-ring index into component indices (used by the product
/// laws in the claim registry).
pub fn product_components(factors: &[FiniteRing], index: usize) -> Vec<usize> {
    let mut rest = index;
    factors
        .iter()
        .map(|f| {
            let d = rest % f.size();
            rest /= f.size();
            d
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn zmod_basics() {
        let f2 = zmod(2, &cfg()).unwrap();
        assert_eq!(f2.size(), 2);
        assert_eq!(f2.label(), "F2");
        let z8 = zmod(8, &cfg()).unwrap();
        let units = analysis::units(&z8);
        assert_eq!(units.set.to_vec(), vec![1, 3, 5, 7]);
        assert!(zmod(1, &cfg()).is_err());
        assert!(zmod(0, &cfg()).is_err());
    }

    #[test]
    fn product_of_two_f2_is_boolean() {
        let f2 = zmod(2, &cfg()).unwrap();
        let p = product(&[f2.clone(), f2.clone()], &cfg()).unwrap();
        assert_eq!(p.size(), 4);
        let profile = analysis::profile(&p, &cfg());
        assert!(profile.flags.is_boolean);
    }

    #[test]
    fn empty_product_is_rejected() {
        assert!(product(&[], &cfg()).is_err());
    }

    #[test]
    fn product_components_round_trip() {
        let f2 = zmod(2, &cfg()).unwrap();
        let z4 = zmod(4, &cfg()).unwrap();
        let p = product(&[f2.clone(), z4.clone()], &cfg()).unwrap();
        assert_eq!(p.size(), 8);
        for idx in 0..8 {
            let parts = product_components(&[f2.clone(), z4.clone()], idx);
            assert_eq!(parts.len(), 2);
            assert_eq!(parts[0] + parts[1] * 2, idx);
        }
    }

    #[test]
    fn quasinilpotents_factor_through_products() {
        let z4 = zmod(4, &cfg()).unwrap();
        let p = product(&[z4.clone(), z4.clone()], &cfg()).unwrap();
        let pp = analysis::profile(&p, &cfg());
        let bp = analysis::profile(&z4, &cfg());
        for idx in 0..p.size() {
            let parts = product_components(&[z4.clone(), z4.clone()], idx);
            let componentwise = parts.iter().all(|&d| bp.quasinilpotents.contains(d));
            assert_eq!(pp.quasinilpotents.contains(idx), componentwise);
        }
    }
}
