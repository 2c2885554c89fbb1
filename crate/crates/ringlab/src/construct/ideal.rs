//! Two-sided ideals and quotient rings.

use crate::config::Config;
use crate::ring::{FiniteRing, Result, RingError, RingMeta, Subset};

/// Close `seeds` under addition and left/right multiplication by every ring
/// element (fixpoint worklist). Returns the two-sided ideal generated by the
/// seeds; always contains zero.
pub fn ideal_generated(ring: &FiniteRing, seeds: &Subset) -> Subset {
    let n = ring.size();
    let mut mask = Subset::empty(ring);
    let mut queue: Vec<usize> = Vec::new();
    let push = |mask: &mut Subset, queue: &mut Vec<usize>, x: usize| {
        if !mask.contains(x) {
            mask.insert(x);
            queue.push(x);
        }
    };
    push(&mut mask, &mut queue, ring.zero());
    for s in seeds.iter() {
        push(&mut mask, &mut queue, s);
    }
    while let Some(x) = queue.pop() {
        for r in 0..n {
            push(&mut mask, &mut queue, ring.mul(r, x));
            push(&mut mask, &mut queue, ring.mul(x, r));
        }
        // additive closure against the members known so far; later members
        // pick up the pair when they are popped themselves
        let members: Vec<usize> = mask.iter().collect();
        for y in members {
            push(&mut mask, &mut queue, ring.add(x, y));
        }
    }
    mask
}

/// Check that `ideal` is a two-sided ideal of `ring`.
pub fn verify_ideal(ring: &FiniteRing, ideal: &Subset) -> Result<()> {
    if !ideal.contains(ring.zero()) {
        return Err(RingError::NotAnIdeal {
            reason: "does not contain zero".into(),
        });
    }
    let members: Vec<usize> = ideal.iter().collect();
    for &a in &members {
        for &b in &members {
            if !ideal.contains(ring.add(a, b)) {
                return Err(RingError::NotAnIdeal {
                    reason: format!("not additively closed: {a} + {b} escapes"),
                });
            }
        }
    }
    for &a in &members {
        for r in 0..ring.size() {
            if !ideal.contains(ring.mul(r, a)) {
                return Err(RingError::NotAnIdeal {
                    reason: format!("not closed under left multiplication: {r} * {a} escapes"),
                });
            }
            if !ideal.contains(ring.mul(a, r)) {
                return Err(RingError::NotAnIdeal {
                    reason: format!("not closed under right multiplication: {a} * {r} escapes"),
                });
            }
        }
    }
    Ok(())
}

/// Build R/I for a verified two-sided ideal I. Returns the quotient ring and
/// the projection map from ambient indices to quotient indices. Quotient
/// element k is the coset of the k-th smallest coset representative, so the
/// construction is deterministic.
pub fn quotient_ring(
    ring: &FiniteRing,
    ideal: &Subset,
    config: &Config,
) -> Result<(FiniteRing, Vec<usize>)> {
    verify_ideal(ring, ideal)?;
    let n = ring.size();
    let members: Vec<usize> = ideal.iter().collect();
    let mut proj = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for a in 0..n {
        if proj[a] != usize::MAX {
            continue;
        }
        let class = reps.len();
        reps.push(a);
        for &i in &members {
            let x = ring.add(a, i);
            debug_assert!(proj[x] == usize::MAX || proj[x] == class);
            proj[x] = class;
        }
    }
    let q = reps.len();
    if q == 1 {
        return Err(RingError::ZeroRing);
    }
    let mut add = vec![0u32; q * q];
    let mut mul = vec![0u32; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            add[i * q + j] = proj[ring.add(a, b)] as u32;
            mul[i * q + j] = proj[ring.mul(a, b)] as u32;
        }
    }
    let zero = proj[ring.zero()];
    let one = proj[ring.one()];
    let quotient = FiniteRing::from_tables(
        q,
        add,
        mul,
        zero,
        one,
        format!(
            "quot({}, ideal({}))",
            ring.label(),
            members
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
        RingMeta::Quotient {
            ambient: ring.clone(),
            ideal: members,
        },
        config,
    )?;
    Ok((quotient, proj))
}
