//! Bimodules, trivial extensions, and formal triangular rings.

use std::sync::Arc;

use crate::config::Config;
use crate::ring::{FiniteRing, Result, RingError, RingMeta, RingStructure};

struct BimoduleInner {
    size: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    left: FiniteRing,
    right: FiniteRing,
    /// left_action[r * size + m] = r . m
    left_action: Vec<u32>,
    /// right_action[m * |S| + s] = m . s
    right_action: Vec<u32>,
    label: String,
}

/// A finite (R, S)-bimodule given by explicit tables: an additive abelian
/// group together with compatible unital biadditive actions.
#[derive(Clone)]
pub struct Bimodule {
    inner: Arc<BimoduleInner>,
}

impl Bimodule {
    pub fn from_tables(
        size: usize,
        add: Vec<u32>,
        zero: usize,
        left: &FiniteRing,
        right: &FiniteRing,
        left_action: Vec<u32>,
        right_action: Vec<u32>,
        label: String,
    ) -> Result<Bimodule> {
        if size == 0 || add.len() != size * size || zero >= size {
            return Err(RingError::InvalidArgument("malformed module tables".into()));
        }
        if left_action.len() != left.size() * size || right_action.len() != size * right.size() {
            return Err(RingError::InvalidArgument("malformed action tables".into()));
        }
        let at = |a: usize, b: usize| add[a * size + b] as usize;
        let la = |r: usize, m: usize| left_action[r * size + m] as usize;
        let ra = |m: usize, s: usize| right_action[m * right.size() + s] as usize;

        // additive abelian group
        let mut neg = vec![0u32; size];
        for a in 0..size {
            if at(a, zero) != a || at(zero, a) != a {
                return Err(RingError::VerificationFailed(format!(
                    "module additive identity fails at {a}"
                )));
            }
            match (0..size).find(|&b| at(a, b) == zero) {
                Some(b) => neg[a] = b as u32,
                None => {
                    return Err(RingError::VerificationFailed(format!(
                        "module element {a} has no additive inverse"
                    )))
                }
            }
        }
        for a in 0..size {
            for b in 0..size {
                if at(a, b) != at(b, a) {
                    return Err(RingError::VerificationFailed(format!(
                        "module addition not commutative at ({a}, {b})"
                    )));
                }
                for c in 0..size {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(RingError::VerificationFailed(format!(
                            "module addition not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }

        // unital actions
        for m in 0..size {
            if la(left.one(), m) != m {
                return Err(RingError::VerificationFailed(format!(
                    "left action not unital at {m}"
                )));
            }
            if ra(m, right.one()) != m {
                return Err(RingError::VerificationFailed(format!(
                    "right action not unital at {m}"
                )));
            }
        }
        // biadditivity
        for r in 0..left.size() {
            for m in 0..size {
                for m2 in 0..size {
                    if la(r, at(m, m2)) != at(la(r, m), la(r, m2)) {
                        return Err(RingError::VerificationFailed(format!(
                            "left action not additive in the module at ({r}, {m}, {m2})"
                        )));
                    }
                }
            }
        }
        for r in 0..left.size() {
            for r2 in 0..left.size() {
                for m in 0..size {
                    if la(left.add(r, r2), m) != at(la(r, m), la(r2, m)) {
                        return Err(RingError::VerificationFailed(format!(
                            "left action not additive in the ring at ({r}, {r2}, {m})"
                        )));
                    }
                    if la(left.mul(r, r2), m) != la(r, la(r2, m)) {
                        return Err(RingError::VerificationFailed(format!(
                            "left action not associative at ({r}, {r2}, {m})"
                        )));
                    }
                }
            }
        }
        for s in 0..right.size() {
            for m in 0..size {
                for m2 in 0..size {
                    if ra(at(m, m2), s) != at(ra(m, s), ra(m2, s)) {
                        return Err(RingError::VerificationFailed(format!(
                            "right action not additive in the module at ({m}, {m2}, {s})"
                        )));
                    }
                }
            }
        }
        for s in 0..right.size() {
            for s2 in 0..right.size() {
                for m in 0..size {
                    if ra(m, right.add(s, s2)) != at(ra(m, s), ra(m, s2)) {
                        return Err(RingError::VerificationFailed(format!(
                            "right action not additive in the ring at ({m}, {s}, {s2})"
                        )));
                    }
                    if ra(m, right.mul(s, s2)) != ra(ra(m, s), s2) {
                        return Err(RingError::VerificationFailed(format!(
                            "right action not associative at ({m}, {s}, {s2})"
                        )));
                    }
                }
            }
        }
        // compatibility (r . m) . s = r . (m . s)
        for r in 0..left.size() {
            for m in 0..size {
                for s in 0..right.size() {
                    if ra(la(r, m), s) != la(r, ra(m, s)) {
                        return Err(RingError::VerificationFailed(format!(
                            "actions incompatible at ({r}, {m}, {s})"
                        )));
                    }
                }
            }
        }

        Ok(Bimodule {
            inner: Arc::new(BimoduleInner {
                size,
                add,
                neg,
                zero,
                left: left.clone(),
                right: right.clone(),
                left_action,
                right_action,
                label,
            }),
        })
    }

    /// The regular (R, R)-bimodule: the additive group of R with both
    /// actions given by ring multiplication.
    pub fn regular(ring: &FiniteRing) -> Bimodule {
        let n = ring.size();
        let mut add = vec![0u32; n * n];
        let mut act = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ring.add(a, b) as u32;
                act[a * n + b] = ring.mul(a, b) as u32;
            }
        }
        let neg = (0..n).map(|a| ring.neg(a) as u32).collect();
        Bimodule {
            inner: Arc::new(BimoduleInner {
                size: n,
                add,
                neg,
                zero: ring.zero(),
                left: ring.clone(),
                right: ring.clone(),
                left_action: act.clone(),
                right_action: act,
                label: format!("regular({})", ring.label()),
            }),
        }
    }

    /// The one-element zero bimodule.
    pub fn zero_module(left: &FiniteRing, right: &FiniteRing) -> Bimodule {
        Bimodule {
            inner: Arc::new(BimoduleInner {
                size: 1,
                add: vec![0],
                neg: vec![0],
                zero: 0,
                left: left.clone(),
                right: right.clone(),
                left_action: vec![0; left.size()],
                right_action: vec![0; right.size()],
                label: "0".to_string(),
            }),
        }
    }

    pub fn size(&self) -> usize {
        self.inner.size
    }

    pub fn zero(&self) -> usize {
        self.inner.zero
    }

    pub fn left_ring(&self) -> &FiniteRing {
        &self.inner.left
    }

    pub fn right_ring(&self) -> &FiniteRing {
        &self.inner.right
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.inner.add[a * self.inner.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.inner.neg[a] as usize
    }

    #[inline]
    pub fn left_act(&self, r: usize, m: usize) -> usize {
        self.inner.left_action[r * self.inner.size + m] as usize
    }

    #[inline]
    pub fn right_act(&self, m: usize, s: usize) -> usize {
        self.inner.right_action[m * self.inner.right.size() + s] as usize
    }
}

struct TrivExtStructure {
    base: FiniteRing,
    module: Bimodule,
    size: usize,
}

impl TrivExtStructure {
    #[inline]
    fn split(&self, x: usize) -> (usize, usize) {
        (x / self.module.size(), x % self.module.size())
    }

    #[inline]
    fn join(&self, r: usize, m: usize) -> usize {
        r * self.module.size() + m
    }
}

impl RingStructure for TrivExtStructure {
    fn size(&self) -> usize {
        self.size
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (r1, m1) = self.split(a);
        let (r2, m2) = self.split(b);
        self.join(self.base.add(r1, r2), self.module.add(m1, m2))
    }

    fn neg(&self, a: usize) -> usize {
        let (r, m) = self.split(a);
        self.join(self.base.neg(r), self.module.neg(m))
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let (r, m) = self.split(a);
        let (s, n) = self.split(b);
        // (r, m)(s, n) = (rs, r.n + m.s)
        self.join(
            self.base.mul(r, s),
            self.module
                .add(self.module.left_act(r, n), self.module.right_act(m, s)),
        )
    }
}

/// The trivial extension of R by an (R, R)-bimodule M: pairs (r, m) with
/// multiplication (r, m)(s, n) = (rs, rn + ms).
pub fn trivial_extension(
    base: &FiniteRing,
    module: &Bimodule,
    config: &Config,
) -> Result<FiniteRing> {
    if !module.left_ring().same_ring(base) || !module.right_ring().same_ring(base) {
        return Err(RingError::PreconditionFailed(
            "module is not a bimodule over the given ring".into(),
        ));
    }
    let size = (base.size() as u128) * (module.size() as u128);
    if size > config.structure_cap as u128 {
        return Err(RingError::SizeCapExceeded {
            size,
            cap: config.structure_cap,
        });
    }
    let structure = TrivExtStructure {
        base: base.clone(),
        module: module.clone(),
        size: size as usize,
    };
    let zero = structure.join(base.zero(), module.zero());
    let one = structure.join(base.one(), module.zero());
    FiniteRing::from_structure(
        Arc::new(structure),
        zero,
        one,
        format!("trivext({})", base.label()),
        RingMeta::TrivialExtension {
            base: base.clone(),
            module_size: module.size(),
        },
        config,
    )
}

/// Convenience form: the trivial extension of R by its regular bimodule.
pub fn trivial_extension_regular(base: &FiniteRing, config: &Config) -> Result<FiniteRing> {
    trivial_extension(base, &Bimodule::regular(base), config)
}

struct FormalTriangularStructure {
    left: FiniteRing,
    right: FiniteRing,
    module: Bimodule,
    size: usize,
}

impl FormalTriangularStructure {
    #[inline]
    fn split(&self, x: usize) -> (usize, usize, usize) {
        let s = x % self.right.size();
        let rest = x / self.right.size();
        let n = rest % self.module.size();
        let r = rest / self.module.size();
        (r, n, s)
    }

    #[inline]
    fn join(&self, r: usize, n: usize, s: usize) -> usize {
        (r * self.module.size() + n) * self.right.size() + s
    }
}

impl RingStructure for FormalTriangularStructure {
    fn size(&self) -> usize {
        self.size
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (r1, n1, s1) = self.split(a);
        let (r2, n2, s2) = self.split(b);
        self.join(
            self.left.add(r1, r2),
            self.module.add(n1, n2),
            self.right.add(s1, s2),
        )
    }

    fn neg(&self, a: usize) -> usize {
        let (r, n, s) = self.split(a);
        self.join(self.left.neg(r), self.module.neg(n), self.right.neg(s))
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let (r1, n1, s1) = self.split(a);
        let (r2, n2, s2) = self.split(b);
        // [r1 n1; 0 s1][r2 n2; 0 s2] = [r1 r2, r1 n2 + n1 s2; 0, s1 s2]
        self.join(
            self.left.mul(r1, r2),
            self.module
                .add(self.module.left_act(r1, n2), self.module.right_act(n1, s2)),
            self.right.mul(s1, s2),
        )
    }
}

/// The formal triangular matrix ring [[R, N], [0, S]] for an (R, S)-bimodule
/// N; elements are triples (r, n, s).
pub fn formal_triangular(
    left: &FiniteRing,
    right: &FiniteRing,
    module: &Bimodule,
    config: &Config,
) -> Result<FiniteRing> {
    if !module.left_ring().same_ring(left) || !module.right_ring().same_ring(right) {
        return Err(RingError::PreconditionFailed(
            "module ring references do not match the triangular corners".into(),
        ));
    }
    let size = (left.size() as u128) * (module.size() as u128) * (right.size() as u128);
    if size > config.structure_cap as u128 {
        return Err(RingError::SizeCapExceeded {
            size,
            cap: config.structure_cap,
        });
    }
    let structure = FormalTriangularStructure {
        left: left.clone(),
        right: right.clone(),
        module: module.clone(),
        size: size as usize,
    };
    let zero = structure.join(left.zero(), module.zero(), right.zero());
    let one = structure.join(left.one(), module.zero(), right.one());
    FiniteRing::from_structure(
        Arc::new(structure),
        zero,
        one,
        format!(
            "formaltri({}, {}, {})",
            left.label(),
            right.label(),
            module.label()
        ),
        RingMeta::FormalTriangular {
            left: left.clone(),
            right: right.clone(),
            module_size: module.size(),
        },
        config,
    )
}

/// Decode a trivial-extension element into (r, m).
pub fn trivext_parts(module_size: usize, index: usize) -> (usize, usize) {
    (index / module_size, index % module_size)
}

/// Decode a formal-triangular element into (r, n, s).
pub fn formal_parts(module_size: usize, right_size: usize, index: usize) -> (usize, usize, usize) {
    let s = index % right_size;
    let rest = index / right_size;
    (rest / module_size, rest % module_size, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::iso::RingIso;
    use crate::construct::{brute_force_isomorphic, product, upper_triangular, zmod};

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn trivial_extension_of_f2() {
        let f2 = zmod(2, &cfg()).unwrap();
        let te = trivial_extension_regular(&f2, &cfg()).unwrap();
        assert_eq!(te.size(), 4);
    }

    #[test]
    fn unital_row_multiplication_adds_module_parts() {
        // (1, m)(1, n) = (1, m + n)
        let z4 = zmod(4, &cfg()).unwrap();
        let te = trivial_extension_regular(&z4, &cfg()).unwrap();
        let join = |r: usize, m: usize| r * 4 + m;
        for m in 0..4 {
            for n in 0..4 {
                assert_eq!(te.mul(join(1, m), join(1, n)), join(1, (m + n) % 4));
            }
        }
    }

    #[test]
    fn formal_triangular_with_regular_module_is_t2() {
        let f2 = zmod(2, &cfg()).unwrap();
        let module = Bimodule::regular(&f2);
        let ft = formal_triangular(&f2, &f2, &module, &cfg()).unwrap();
        assert_eq!(ft.size(), 8);
        let t2 = upper_triangular(2, &f2, &cfg()).unwrap();
        // explicit entrywise map (r, n, s) -> [[r, n], [0, s]]
        let map: Vec<usize> = (0..8)
            .map(|idx| {
                let (r, n, s) = formal_parts(2, 2, idx);
                crate::construct::matrix::triangular_index(&f2, 2, &[r, n, s])
            })
            .collect();
        let iso = RingIso::verify(&ft, &t2, map, &cfg());
        assert!(iso.is_ok());
    }

    #[test]
    fn zero_module_gives_the_product() {
        let f2 = zmod(2, &cfg()).unwrap();
        let z4 = zmod(4, &cfg()).unwrap();
        let module = Bimodule::zero_module(&f2, &z4);
        let ft = formal_triangular(&f2, &z4, &module, &cfg()).unwrap();
        assert_eq!(ft.size(), 8);
        let p = product(&[f2.clone(), z4.clone()], &cfg()).unwrap();
        assert!(brute_force_isomorphic(&ft, &p, &cfg()).unwrap().is_some());
    }

    #[test]
    fn broken_action_tables_are_rejected() {
        let f2 = zmod(2, &cfg()).unwrap();
        // left action that is not unital: r . m = 0 always
        let result = Bimodule::from_tables(
            2,
            vec![0, 1, 1, 0],
            0,
            &f2,
            &f2,
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 1],
            "broken".into(),
        );
        assert!(result.is_err());
    }

    #[test]
    fn mismatched_module_rings_are_rejected() {
        let f2 = zmod(2, &cfg()).unwrap();
        let z4 = zmod(4, &cfg()).unwrap();
        let module = Bimodule::regular(&z4);
        assert!(trivial_extension(&f2, &module, &cfg()).is_err());
    }
}
