//! Corner rings eRe for an idempotent e.

use super::embed::RingEmbedding;
use crate::config::Config;
use crate::ring::{FiniteRing, Result, RingError, RingMeta};

/// The corner ring eRe with identity e, together with its (non-unital unless
/// e = 1) embedding into R. For e = 1 the ring itself is returned.
pub fn corner(ring: &FiniteRing, e: usize, config: &Config) -> Result<(FiniteRing, RingEmbedding)> {
    if e >= ring.size() {
        return Err(RingError::InvalidArgument(format!(
            "idempotent index {e} out of range"
        )));
    }
    if e == ring.zero() {
        return Err(RingError::ZeroIdempotent);
    }
    if ring.mul(e, e) != e {
        return Err(RingError::NotIdempotent { index: e });
    }
    if e == ring.one() {
        let map = (0..ring.size()).collect();
        let embedding = RingEmbedding::new_verified(ring.clone(), ring.clone(), map, true)?;
        return Ok((ring.clone(), embedding));
    }

    // enumerate e x e, ascending
    let mut mask = vec![false; ring.size()];
    for x in 0..ring.size() {
        mask[ring.mul(ring.mul(e, x), e)] = true;
    }
    let elems: Vec<usize> = (0..ring.size()).filter(|&x| mask[x]).collect();
    let size = elems.len();
    if size as u128 > config.table_cap as u128 {
        return Err(RingError::SizeCapExceeded {
            size: size as u128,
            cap: config.table_cap,
        });
    }
    let mut index_of = vec![u32::MAX; ring.size()];
    for (i, &x) in elems.iter().enumerate() {
        index_of[x] = i as u32;
    }
    let lookup = |x: usize| -> usize { index_of[x] as usize };

    let mut add = vec![0u32; size * size];
    let mut mul = vec![0u32; size * size];
    for (i, &x) in elems.iter().enumerate() {
        for (j, &y) in elems.iter().enumerate() {
            add[i * size + j] = lookup(ring.add(x, y)) as u32;
            mul[i * size + j] = lookup(ring.mul(x, y)) as u32;
        }
    }
    let zero = lookup(ring.zero());
    let one = lookup(e);
    let corner_ring = FiniteRing::from_tables(
        size,
        add,
        mul,
        zero,
        one,
        format!("corner({}, {e})", ring.label()),
        RingMeta::Corner {
            ambient: ring.clone(),
            idempotent: e,
        },
        config,
    )?;
    let embedding = RingEmbedding::new_verified(corner_ring.clone(), ring.clone(), elems, false)?;
    Ok((corner_ring, embedding))
}
