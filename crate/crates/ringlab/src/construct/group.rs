//! Finite groups presented by Cayley tables, for group-ring construction.
//!
//! All constructors place the identity at index 0 and verify the group
//! axioms exhaustively (the groups in play are tiny).

use std::sync::Arc;

use crate::ring::{Result, RingError};

struct GroupInner {
    size: usize,
    op: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    label: String,
}

#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupInner>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, |G|={})", self.label(), self.size())
    }
}

impl FiniteGroup {
    /// Build from a Cayley table (row-major, `op[a * size + b]`), verifying
    /// associativity, identity, and inverses.
    pub fn from_table(
        size: usize,
        op: Vec<u32>,
        identity: usize,
        label: String,
    ) -> Result<FiniteGroup> {
        if size == 0 || op.len() != size * size || identity >= size {
            return Err(RingError::InvalidArgument("malformed Cayley table".into()));
        }
        for &v in &op {
            if v as usize >= size {
                return Err(RingError::InvalidArgument(
                    "Cayley table entry out of range".into(),
                ));
            }
        }
        let at = |a: usize, b: usize| op[a * size + b] as usize;
        for a in 0..size {
            if at(a, identity) != a || at(identity, a) != a {
                return Err(RingError::VerificationFailed(format!(
                    "group identity fails at element {a}"
                )));
            }
        }
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(RingError::VerificationFailed(format!(
                            "group associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![0u32; size];
        for a in 0..size {
            match (0..size).find(|&b| at(a, b) == identity && at(b, a) == identity) {
                Some(b) => inverse[a] = b as u32,
                None => {
                    return Err(RingError::VerificationFailed(format!(
                        "element {a} has no inverse"
                    )))
                }
            }
        }
        let mut orders = vec![0u32; size];
        for a in 0..size {
            let mut x = a;
            let mut k = 1;
            while x != identity {
                x = at(x, a);
                k += 1;
            }
            orders[a] = k;
        }
        Ok(FiniteGroup {
            inner: Arc::new(GroupInner {
                size,
                op,
                identity,
                inverse,
                orders,
                label,
            }),
        })
    }

    pub fn size(&self) -> usize {
        self.inner.size
    }

    pub fn identity(&self) -> usize {
        self.inner.identity
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.inner.op[a * self.inner.size + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inner.inverse[a] as usize
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.inner.orders[a]
    }

    /// Whether |G| is a power of two.
    pub fn is_2_group(&self) -> bool {
        self.inner.size.is_power_of_two()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.inner.size;
        (0..n).all(|a| (a..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }
}

/// The cyclic group of order n.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(RingError::InvalidArgument("group order 0".into()));
    }
    let mut op = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            op[a * n + b] = ((a + b) % n) as u32;
        }
    }
    FiniteGroup::from_table(n, op, 0, format!("C({n})"))
}

/// Direct product with little-endian mixed-radix indices.
pub fn group_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (gs, hs) = (g.size(), h.size());
    let n = gs * hs;
    let mut op = vec![0u32; n * n];
    for a in 0..n {
        let (ag, ah) = (a % gs, a / gs);
        for b in 0..n {
            let (bg, bh) = (b % gs, b / gs);
            op[a * n + b] = (g.op(ag, bg) + h.op(ah, bh) * gs) as u32;
        }
    }
    FiniteGroup::from_table(n, op, 0, format!("prod({}, {})", g.label(), h.label()))
}

/// Dihedral group of order 2n: rotations r^i and reflections r^i s, with
/// index i for r^i and n + i for r^i s.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 1 {
        return Err(RingError::InvalidArgument("dihedral parameter 0".into()));
    }
    let size = 2 * n;
    let mut op = vec![0u32; size * size];
    let enc = |i: usize, s: usize| i + n * s;
    for i in 0..n {
        for si in 0..2 {
            for j in 0..n {
                for sj in 0..2 {
                    // (r^i s^si)(r^j s^sj): s r^j = r^{-j} s
                    let jj = if si == 1 { (n - j) % n } else { j };
                    let res = enc((i + jj) % n, (si + sj) % 2);
                    op[enc(i, si) * size + enc(j, sj)] = res as u32;
                }
            }
        }
    }
    let label = if n == 4 {
        "D4".to_string()
    } else {
        format!("dihedral({n})")
    };
    FiniteGroup::from_table(size, op, 0, label)
}

/// The quaternion group of order 8: {1, -1, i, -i, j, -j, k, -k} with
/// index 2t + s for symbol t in (1, i, j, k) and sign s.
pub fn quaternion8() -> Result<FiniteGroup> {
    // symbol product table: entry (a, b) = (symbol, sign flip)
    const SYM: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let size = 8;
    let mut op = vec![0u32; size * size];
    for a in 0..size {
        let (ta, sa) = (a / 2, a % 2);
        for b in 0..size {
            let (tb, sb) = (b / 2, b % 2);
            let (t, flip) = SYM[ta][tb];
            let s = (sa + sb + flip) % 2;
            op[a * size + b] = (t * 2 + s) as u32;
        }
    }
    FiniteGroup::from_table(size, op, 0, "Q8".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups() {
        let c4 = cyclic(4).unwrap();
        assert_eq!(c4.size(), 4);
        assert!(c4.is_2_group());
        assert!(c4.is_abelian());
        assert_eq!(c4.element_order(1), 4);
        assert_eq!(c4.element_order(2), 2);
        let c3 = cyclic(3).unwrap();
        assert!(!c3.is_2_group());
    }

    #[test]
    fn group_products() {
        let c2 = cyclic(2).unwrap();
        let v4 = group_product(&c2, &c2).unwrap();
        assert_eq!(v4.size(), 4);
        assert!(v4.is_2_group());
        assert!(v4.is_abelian());
        // every nonidentity element has order 2
        for g in 1..4 {
            assert_eq!(v4.element_order(g), 2);
        }
        let c6 = group_product(&c2, &cyclic(3).unwrap()).unwrap();
        assert!(!c6.is_2_group());
        assert_eq!(c6.size(), 6);
    }

    #[test]
    fn dihedral_of_the_square() {
        let d4 = dihedral(4).unwrap();
        assert_eq!(d4.size(), 8);
        assert!(d4.is_2_group());
        assert!(!d4.is_abelian());
        // a rotation of order 4 and a reflection of order 2
        assert_eq!(d4.element_order(1), 4);
        assert_eq!(d4.element_order(4), 2);
    }

    #[test]
    fn quaternions() {
        let q8 = quaternion8().unwrap();
        assert_eq!(q8.size(), 8);
        assert!(q8.is_2_group());
        assert!(!q8.is_abelian());
        // exactly one element of order 2
        let order2 = (0..8).filter(|&g| q8.element_order(g) == 2).count();
        assert_eq!(order2, 1);
        // six elements of order 4
        let order4 = (0..8).filter(|&g| q8.element_order(g) == 4).count();
        assert_eq!(order4, 6);
    }

    #[test]
    fn malformed_tables_are_rejected() {
        // a "table" that is not associative: op(a, b) = a
        let op: Vec<u32> = (0..9).map(|i| (i / 3) as u32).collect();
        assert!(FiniteGroup::from_table(3, op, 0, "bad".into()).is_err());
    }
}
