//! Truncated polynomial rings R\[x\]/(x^n).

use std::sync::Arc;

use super::{checked_pow_size, DigitCodec, MAX_DIGITS};
use crate::config::Config;
use crate::ring::{FiniteRing, Result, RingError, RingMeta, RingStructure};

pub(crate) struct PolyQuotientStructure {
    base: FiniteRing,
    degree: usize,
    codec: DigitCodec,
    size: usize,
}

impl RingStructure for PolyQuotientStructure {
    fn size(&self) -> usize {
        self.size
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let mut da = [0usize; MAX_DIGITS];
        let mut db = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        self.codec.decode(b, &mut db);
        for i in 0..self.degree {
            da[i] = self.base.add(da[i], db[i]);
        }
        self.codec.encode(&da)
    }

    fn neg(&self, a: usize) -> usize {
        let mut da = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        for d in da.iter_mut().take(self.degree) {
            *d = self.base.neg(*d);
        }
        self.codec.encode(&da)
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let mut da = [0usize; MAX_DIGITS];
        let mut db = [0usize; MAX_DIGITS];
        let mut out = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        self.codec.decode(b, &mut db);
        let zero = self.base.zero();
        // convolution truncated at degree `self.degree`
        for (k, o) in out.iter_mut().enumerate().take(self.degree) {
            let mut acc = zero;
            for i in 0..=k {
                acc = self.base.add(acc, self.base.mul(da[i], db[k - i]));
            }
            *o = acc;
        }
        self.codec.encode(&out)
    }
}

/// R\[x\]/(x^n): coefficient vectors of length n, constant term first.
pub fn poly_quotient(base: &FiniteRing, n: usize, config: &Config) -> Result<FiniteRing> {
    if n == 0 {
        return Err(RingError::InvalidArgument(
            "truncation degree must be at least 1".into(),
        ));
    }
    let size = checked_pow_size(base.size(), n as u32, config.structure_cap)?;
    let codec = DigitCodec::new(base.size(), n)?;
    let structure = PolyQuotientStructure {
        base: base.clone(),
        degree: n,
        codec,
        size,
    };
    let mut digits = [0usize; MAX_DIGITS];
    for d in digits.iter_mut().take(n) {
        *d = base.zero();
    }
    let zero = codec.encode(&digits);
    digits[0] = base.one();
    let one = codec.encode(&digits);
    FiniteRing::from_structure(
        Arc::new(structure),
        zero,
        one,
        format!("polyq({}, {n})", base.label()),
        RingMeta::PolyQuotient {
            base: base.clone(),
            degree: n,
        },
        config,
    )
}

/// Coefficients (constant term first) of a truncated-polynomial element.
pub fn poly_coefficients(base: &FiniteRing, degree: usize, index: usize) -> Vec<usize> {
    let codec = DigitCodec::new(base.size(), degree).expect("degree checked at construction");
    let mut d = [0usize; MAX_DIGITS];
    codec.decode(index, &mut d);
    d[..degree].to_vec()
}

/// Encode coefficients (constant term first) into an element index.
pub fn poly_index(base: &FiniteRing, degree: usize, coeffs: &[usize]) -> usize {
    let codec = DigitCodec::new(base.size(), degree).expect("degree checked at construction");
    codec.encode(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::zmod;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn truncation_kills_high_powers() {
        let f2 = zmod(2, &cfg()).unwrap();
        for n in 2..=4 {
            let r = poly_quotient(&f2, n, &cfg()).unwrap();
            let mut x_coeffs = vec![0usize; n];
            x_coeffs[1] = 1;
            let x = poly_index(&f2, n, &x_coeffs);
            assert_eq!(r.pow(x, (n - 1) as u64), {
                let mut c = vec![0usize; n];
                c[n - 1] = 1;
                poly_index(&f2, n, &c)
            });
            assert_eq!(r.pow(x, n as u64), r.zero());
        }
    }

    #[test]
    fn quadratic_quotient_matches_the_trivial_extension() {
        let f2 = zmod(2, &cfg()).unwrap();
        let pq = poly_quotient(&f2, 2, &cfg()).unwrap();
        assert_eq!(pq.size(), 4);
        let te = crate::construct::trivial_extension_regular(&f2, &cfg()).unwrap();
        let iso = crate::construct::brute_force_isomorphic(&te, &pq, &cfg()).unwrap();
        assert!(iso.is_some());
    }
}
