//! Six parameterized ring families over an arbitrary finite base ring:
//! three presented by generators and relations on a normal-form monomial
//! basis, and three as structured subrings of upper-triangular matrix rings.
//! They come in matching pairs connected by explicit isomorphisms (see
//! `construct::iso`), which is why the presented side and the matrix side
//! are implemented along independent routes: the presented rings multiply by
//! word reduction, the matrix rings by literal matrix multiplication on
//! their embedded form.
//!
//! Digit layouts (little-endian, digit 0 has weight 1):
//!
//! * `a_ring(n, m)` / `t_ring(n, m)`: `[head, x_1..x_{n-1}, y_1..y_{m-1}]`,
//!   length n + m - 1.
//! * `b_ring(n, m)`: grid `a_{i,j}` at digit `i * n + j` for the word
//!   y^i x^j (i < m, j < n), length n * m.
//! * `s_ring(n, m)`: `[head, b_1..b_{n-1}, d_1..d_{m-1}, g_{1,1}..g_{m-1,n-1}]`
//!   (grid row-major), length n * m.
//! * `c_ring(n)` / `u_ring(n)`: `[head, y-words of length 1..n-1,
//!   x-words of length 1..n-2]`, length 2n - 2.

use std::sync::Arc;

use super::{checked_pow_size, DigitCodec, MAX_DIGITS};
use crate::config::Config;
use crate::ring::{FiniteRing, Result, RingError, RingMeta, RingStructure};

fn check_params(n: usize, m: usize) -> Result<()> {
    if n < 2 || m < 2 {
        return Err(RingError::InvalidArgument(
            "family parameters must be at least 2".into(),
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// presented side
// ---------------------------------------------------------------------------

/// Commuting pair x, y with x^n = xy = y^m = 0: basis 1, x..x^{n-1},
/// y..y^{m-1}. The x- and y-chains multiply as truncated convolutions that
/// share the constant head; cross terms vanish.
struct PolyPairStructure {
    base: FiniteRing,
    n: usize,
    m: usize,
    codec: DigitCodec,
    size: usize,
}

impl PolyPairStructure {
    #[inline]
    fn componentwise(&self, a: usize, b: usize, f: impl Fn(usize, usize) -> usize) -> usize {
        let mut da = [0usize; MAX_DIGITS];
        let mut db = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        self.codec.decode(b, &mut db);
        for i in 0..self.codec.len {
            da[i] = f(da[i], db[i]);
        }
        self.codec.encode(&da)
    }
}

impl RingStructure for PolyPairStructure {
    fn size(&self) -> usize {
        self.size
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.componentwise(a, b, |x, y| self.base.add(x, y))
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
        let (n, m) = (self.n, self.m);
        let mut da = [0usize; MAX_DIGITS];
        let mut db = [0usize; MAX_DIGITS];
        let mut out = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        self.codec.decode(b, &mut db);
        let zero = self.base.zero();
        // head
        out[0] = self.base.mul(da[0], db[0]);
        // x-chain: digit k is x^k for 1 <= k < n, with digit 0 as x^0
        for k in 1..n {
            let mut acc = zero;
            for i in 0..=k {
                let ai = if i == 0 { da[0] } else { da[i] };
                let bj = if k - i == 0 { db[0] } else { db[k - i] };
                // only x-chain digits participate
                if i >= n || k - i >= n {
                    continue;
                }
                acc = self.base.add(acc, self.base.mul(ai, bj));
            }
            out[k] = acc;
        }
        // y-chain: digit n - 1 + k is y^k for 1 <= k < m
        for k in 1..m {
            let mut acc = zero;
            for i in 0..=k {
                let ai = if i == 0 { da[0] } else { da[n - 1 + i] };
                let bj = if k - i == 0 {
                    db[0]
                } else {
                    db[n - 1 + (k - i)]
                };
                acc = self.base.add(acc, self.base.mul(ai, bj));
            }
            out[n - 1 + k] = acc;
        }
        self.codec.encode(&out)
    }
}

/// The commuting-pair family on the basis {1, x..x^{n-1}, y..y^{m-1}}.
pub fn a_ring(n: usize, m: usize, base: &FiniteRing, config: &Config) -> Result<FiniteRing> {
    check_params(n, m)?;
    let len = n + m - 1;
    let size = checked_pow_size(base.size(), len as u32, config.structure_cap)?;
    let codec = DigitCodec::new(base.size(), len)?;
    let structure = PolyPairStructure {
        base: base.clone(),
        n,
        m,
        codec,
        size,
    };
    let (zero, one) = const_indices(base, len, &codec);
    FiniteRing::from_structure(
        Arc::new(structure),
        zero,
        one,
        format!("A({n}, {m}, {})", base.label()),
        RingMeta::PolyPair {
            base: base.clone(),
            n,
            m,
        },
        config,
    )
}

/// Noncommuting pair with x^n = xy = y^m = 0 (but yx survives): normal form
/// basis y^i x^j with i < m, j < n.
struct FreePairStructure {
    base: FiniteRing,
    n: usize,
    m: usize,
    codec: DigitCodec,
    size: usize,
}

impl RingStructure for FreePairStructure {
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
        let (n, m) = (self.n, self.m);
        let mut da = [0usize; MAX_DIGITS];
        let mut db = [0usize; MAX_DIGITS];
        let mut out = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        self.codec.decode(b, &mut db);
        let zero = self.base.zero();
        for o in out.iter_mut().take(self.codec.len) {
            *o = zero;
        }
        // (y^i x^j)(y^k x^l): zero if j > 0 and k > 0 (contains xy);
        // otherwise exponents merge and truncate against y^m = x^n = 0
        for i in 0..m {
            for j in 0..n {
                let ca = da[i * n + j];
                if ca == zero {
                    continue;
                }
                for k in 0..m {
                    for l in 0..n {
                        let cb = db[k * n + l];
                        if cb == zero {
                            continue;
                        }
                        if j > 0 && k > 0 {
                            continue;
                        }
                        let (yi, xj) = if j == 0 { (i + k, l) } else { (i, j + l) };
                        if yi >= m || xj >= n {
                            continue;
                        }
                        let pos = yi * n + xj;
                        out[pos] = self.base.add(out[pos], self.base.mul(ca, cb));
                    }
                }
            }
        }
        self.codec.encode(&out)
    }
}

/// The noncommuting-pair family on the basis {y^i x^j : i < m, j < n}.
pub fn b_ring(n: usize, m: usize, base: &FiniteRing, config: &Config) -> Result<FiniteRing> {
    check_params(n, m)?;
    let len = n * m;
    let size = checked_pow_size(base.size(), len as u32, config.structure_cap)?;
    let codec = DigitCodec::new(base.size(), len)?;
    let structure = FreePairStructure {
        base: base.clone(),
        n,
        m,
        codec,
        size,
    };
    let (zero, one) = const_indices(base, len, &codec);
    FiniteRing::from_structure(
        Arc::new(structure),
        zero,
        one,
        format!("B({n}, {m}, {})", base.label()),
        RingMeta::FreePair {
            base: base.clone(),
            n,
            m,
        },
        config,
    )
}

/// Basis words of the alternating family: the empty word, alternating words
/// starting with y of length 1..=n-1, and alternating words starting with x
/// of length 1..=n-2 (the x-started word of length n-1 is the killed
/// relation).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum AltWord {
    Empty,
    /// (starts_with_x, length)
    Word(bool, usize),
}

pub(crate) fn alt_word_count(n: usize) -> usize {
    2 * n - 2
}

pub(crate) fn alt_word_of_pos(n: usize, pos: usize) -> AltWord {
    if pos == 0 {
        AltWord::Empty
    } else if pos < n {
        AltWord::Word(false, pos)
    } else {
        AltWord::Word(true, pos - (n - 1))
    }
}

pub(crate) fn alt_pos_of_word(n: usize, word: AltWord) -> usize {
    match word {
        AltWord::Empty => 0,
        AltWord::Word(false, len) => len,
        AltWord::Word(true, len) => n - 1 + len,
    }
}

/// Concatenate two basis words under the relations x^2 = y^2 = 0, the
/// x-started alternating word of length n-1 = 0, and (consequently) every
/// alternating word of length >= n = 0. Returns None when the product
/// vanishes.
pub(crate) fn alt_concat(n: usize, u: AltWord, v: AltWord) -> Option<AltWord> {
    match (u, v) {
        (AltWord::Empty, w) | (w, AltWord::Empty) => Some(w),
        (AltWord::Word(ux, ulen), AltWord::Word(vx, vlen)) => {
            // last letter of u: starts at ux, alternates ulen - 1 times
            let u_last_is_x = if ulen % 2 == 1 { ux } else { !ux };
            if u_last_is_x == vx {
                return None; // letter collision xx or yy
            }
            let len = ulen + vlen;
            if len >= n {
                return None;
            }
            if len == n - 1 && ux {
                return None; // the killed word starts with x
            }
            Some(AltWord::Word(ux, len))
        }
    }
}

struct AlternatingStructure {
    base: FiniteRing,
    n: usize,
    codec: DigitCodec,
    size: usize,
}

impl RingStructure for AlternatingStructure {
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
        let len = self.codec.len;
        let mut da = [0usize; MAX_DIGITS];
        let mut db = [0usize; MAX_DIGITS];
        let mut out = [0usize; MAX_DIGITS];
        self.codec.decode(a, &mut da);
        self.codec.decode(b, &mut db);
        let zero = self.base.zero();
        for o in out.iter_mut().take(len) {
            *o = zero;
        }
        for (pa, &ca) in da.iter().enumerate().take(len) {
            if ca == zero {
                continue;
            }
            let u = alt_word_of_pos(n, pa);
            for (pb, &cb) in db.iter().enumerate().take(len) {
                if cb == zero {
                    continue;
                }
                let v = alt_word_of_pos(n, pb);
                if let Some(w) = alt_concat(n, u, v) {
                    let pos = alt_pos_of_word(n, w);
                    out[pos] = self.base.add(out[pos], self.base.mul(ca, cb));
                }
            }
        }
        self.codec.encode(&out)
    }
}

/// The alternating-word family with x^2 = y^2 = 0 and the length-(n-1)
/// x-started alternating word killed; 2n - 2 basis words.
pub fn c_ring(n: usize, base: &FiniteRing, config: &Config) -> Result<FiniteRing> {
    if n < 2 {
        return Err(RingError::InvalidArgument(
            "family parameter must be at least 2".into(),
        ));
    }
    let len = alt_word_count(n);
    let size = checked_pow_size(base.size(), len as u32, config.structure_cap)?;
    let codec = DigitCodec::new(base.size(), len)?;
    let structure = AlternatingStructure {
        base: base.clone(),
        n,
        codec,
        size,
    };
    let (zero, one) = const_indices(base, len, &codec);
    FiniteRing::from_structure(
        Arc::new(structure),
        zero,
        one,
        format!("C({n}, {})", base.label()),
        RingMeta::Alternating {
            base: base.clone(),
            n,
        },
        config,
    )
}

// ---------------------------------------------------------------------------
// matrix side
// ---------------------------------------------------------------------------

/// Placement of family parameters into a full matrix: `positions[k]` lists
/// the (row, col) cells that carry parameter k. Multiplication embeds both
/// operands, multiplies literally, and reads parameters back; the read-back
/// asserts that every cell of a parameter agrees and that all other cells
/// are zero, so any closure failure of the displayed shape would surface
/// immediately.
struct MatrixShape {
    dim: usize,
    positions: Vec<Vec<(usize, usize)>>,
}

impl MatrixShape {
    fn embed(&self, base: &FiniteRing, params: &[usize], out: &mut [usize]) {
        for c in out.iter_mut().take(self.dim * self.dim) {
            *c = base.zero();
        }
        for (k, cells) in self.positions.iter().enumerate() {
            for &(r, c) in cells {
                out[r * self.dim + c] = params[k];
            }
        }
    }

    fn extract(&self, base: &FiniteRing, mat: &[usize], out: &mut [usize]) {
        let mut claimed = vec![false; self.dim * self.dim];
        for (k, cells) in self.positions.iter().enumerate() {
            let value = mat[cells[0].0 * self.dim + cells[0].1];
            for &(r, c) in cells {
                debug_assert_eq!(
                    mat[r * self.dim + c],
                    value,
                    "parameter {k} inconsistent across its cells"
                );
                claimed[r * self.dim + c] = true;
            }
            out[k] = value;
        }
        if cfg!(debug_assertions) {
            for r in 0..self.dim {
                for c in 0..self.dim {
                    if !claimed[r * self.dim + c] {
                        debug_assert_eq!(
                            mat[r * self.dim + c],
                            base.zero(),
                            "unclaimed cell ({r}, {c}) must stay zero"
                        );
                    }
                }
            }
        }
    }
}

struct ShapedMatrixStructure {
    base: FiniteRing,
    shape: MatrixShape,
    codec: DigitCodec,
    size: usize,
}

const MAX_SHAPE_DIM: usize = 12;

impl RingStructure for ShapedMatrixStructure {
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
        let dim = self.shape.dim;
        let mut pa = [0usize; MAX_DIGITS];
        let mut pb = [0usize; MAX_DIGITS];
        let mut ma = [0usize; MAX_SHAPE_DIM * MAX_SHAPE_DIM];
        let mut mb = [0usize; MAX_SHAPE_DIM * MAX_SHAPE_DIM];
        let mut mc = [0usize; MAX_SHAPE_DIM * MAX_SHAPE_DIM];
        self.codec.decode(a, &mut pa);
        self.codec.decode(b, &mut pb);
        self.shape.embed(&self.base, &pa, &mut ma);
        self.shape.embed(&self.base, &pb, &mut mb);
        let zero = self.base.zero();
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = zero;
                for k in i..=j {
                    // both operands are upper triangular
                    acc = self
                        .base
                        .add(acc, self.base.mul(ma[i * dim + k], mb[k * dim + j]));
                }
                mc[i * dim + j] = acc;
            }
        }
        let mut out = [0usize; MAX_DIGITS];
        self.shape.extract(&self.base, &mc, &mut out);
        self.codec.encode(&out)
    }
}

fn shaped_ring(
    base: &FiniteRing,
    shape: MatrixShape,
    one_param_positions: &[usize],
    label: String,
    meta: RingMeta,
    config: &Config,
) -> Result<FiniteRing> {
    if shape.dim > MAX_SHAPE_DIM {
        return Err(RingError::InvalidArgument(format!(
            "matrix dimension {} exceeds the supported maximum {MAX_SHAPE_DIM}",
            shape.dim
        )));
    }
    let len = shape.positions.len();
    let size = checked_pow_size(base.size(), len as u32, config.structure_cap)?;
    let codec = DigitCodec::new(base.size(), len)?;
    let structure = ShapedMatrixStructure {
        base: base.clone(),
        shape,
        codec,
        size,
    };
    let mut digits = vec![base.zero(); len];
    let zero = codec.encode(&digits);
    for &p in one_param_positions {
        digits[p] = base.one();
    }
    let one = codec.encode(&digits);
    FiniteRing::from_structure(Arc::new(structure), zero, one, label, meta, config)
}

/// Block-diagonal pair of upper-triangular Toeplitz blocks sharing the
/// scalar head: an n x n block with bands b_1..b_{n-1} and an m x m block
/// with bands c_1..c_{m-1}, inside T_{n+m}(base).
pub fn t_ring(n: usize, m: usize, base: &FiniteRing, config: &Config) -> Result<FiniteRing> {
    check_params(n, m)?;
    let dim = n + m;
    // parameter 0: head on the whole diagonal
    let mut positions: Vec<Vec<(usize, usize)>> = vec![(0..dim).map(|i| (i, i)).collect()];
    // x-bands in the first block
    for k in 1..n {
        positions.push((0..n - k).map(|r| (r, r + k)).collect());
    }
    // y-bands in the second block
    for k in 1..m {
        positions.push((0..m - k).map(|r| (n + r, n + r + k)).collect());
    }
    shaped_ring(
        base,
        MatrixShape { dim, positions },
        &[0],
        format!("Tnm({n}, {m}, {})", base.label()),
        RingMeta::ToeplitzPair {
            base: base.clone(),
            n,
            m,
        },
        config,
    )
}

/// Toeplitz top-left m x m block (bands d), Toeplitz bottom-right block from
/// row m-1 on (bands b), and a free grid in rows 0..m-1, columns m..n+m-2;
/// inside T_{n+m-1}(base). The digit layout is
/// `[head, b_1.., d_1.., g_{1,1}..g_{m-1,n-1}]`.
pub fn s_ring(n: usize, m: usize, base: &FiniteRing, config: &Config) -> Result<FiniteRing> {
    check_params(n, m)?;
    let dim = n + m - 1;
    let mut positions: Vec<Vec<(usize, usize)>> = vec![(0..dim).map(|i| (i, i)).collect()];
    // x-bands: rows m-1..dim, offset k
    for k in 1..n {
        positions.push(((m - 1)..dim - k).map(|r| (r, r + k)).collect());
    }
    // y-bands: rows 0..m-1 (top-left block), offset k, columns < m
    for k in 1..m {
        positions.push((0..m - k).map(|r| (r, r + k)).collect());
    }
    // grid: g_{i,j} (i = 1..m-1, j = 1..n-1) at row m-1-i, column m-1+j
    for i in 1..m {
        for j in 1..n {
            positions.push(vec![(m - 1 - i, m - 1 + j)]);
        }
    }
    shaped_ring(
        base,
        MatrixShape { dim, positions },
        &[0],
        format!("S({n}, {m}, {})", base.label()),
        RingMeta::ToeplitzGrid {
            base: base.clone(),
            n,
            m,
        },
        config,
    )
}

/// Single n x n triangular matrix with two interleaved band families:
/// even rows carry the b-bands, odd rows the c-bands, sharing the head on
/// the diagonal.
pub fn u_ring(n: usize, base: &FiniteRing, config: &Config) -> Result<FiniteRing> {
    if n < 2 {
        return Err(RingError::InvalidArgument(
            "family parameter must be at least 2".into(),
        ));
    }
    let dim = n;
    let mut positions: Vec<Vec<(usize, usize)>> = vec![(0..dim).map(|i| (i, i)).collect()];
    // b-bands from even rows, lengths 1..n-1
    for k in 1..n {
        positions.push(
            (0..dim - k)
                .filter(|r| r % 2 == 0)
                .map(|r| (r, r + k))
                .collect(),
        );
    }
    // c-bands from odd rows, lengths 1..n-2
    for k in 1..n.saturating_sub(1) {
        positions.push(
            (0..dim - k)
                .filter(|r| r % 2 == 1)
                .map(|r| (r, r + k))
                .collect(),
        );
    }
    shaped_ring(
        base,
        MatrixShape { dim, positions },
        &[0],
        format!("U({n}, {})", base.label()),
        RingMeta::ToeplitzInterleaved {
            base: base.clone(),
            n,
        },
        config,
    )
}

fn const_indices(base: &FiniteRing, len: usize, codec: &DigitCodec) -> (usize, usize) {
    let mut digits = vec![base.zero(); len];
    let zero = codec.encode(&digits);
    digits[0] = base.one();
    let one = codec.encode(&digits);
    (zero, one)
}

/// Digits of a family element (shared little-endian layout).
pub fn family_digits(base: &FiniteRing, len: usize, index: usize) -> Vec<usize> {
    let codec = DigitCodec::new(base.size(), len).expect("length checked at construction");
    let mut d = [0usize; MAX_DIGITS];
    codec.decode(index, &mut d);
    d[..len].to_vec()
}

/// Encode family digits back into an element index.
pub fn family_index(base: &FiniteRing, len: usize, digits: &[usize]) -> usize {
    let codec = DigitCodec::new(base.size(), len).expect("length checked at construction");
    codec.encode(digits)
}

/// Coefficient-vector length of a family ring, from its metadata.
pub fn family_len(meta: &RingMeta) -> Option<usize> {
    match meta {
        RingMeta::PolyPair { n, m, .. } | RingMeta::ToeplitzPair { n, m, .. } => Some(n + m - 1),
        RingMeta::FreePair { n, m, .. } | RingMeta::ToeplitzGrid { n, m, .. } => Some(n * m),
        RingMeta::Alternating { n, .. } | RingMeta::ToeplitzInterleaved { n, .. } => {
            Some(2 * n - 2)
        }
        _ => None,
    }
}
