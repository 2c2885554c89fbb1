//! The lower nilradical via the chain of nilpotent-ideal sums.
//!
//! One step computes W(R) = {a : the two-sided ideal generated by a is
//! nilpotent}; W(R) is the sum of all nilpotent ideals (principal nilpotent
//! ideals generate it and the sum of two nilpotent ideals is nilpotent). The
//! chain lifts through successive quotients R -> R/W until W vanishes; the
//! accumulated kernel is the lower nilradical. Candidates are restricted to
//! the radical since a nilpotent ideal always sits inside it.

use super::{jacobson_radical, units};
use crate::config::Config;
use crate::construct::ideal::{ideal_generated, quotient_ring};
use crate::ring::{FiniteRing, Result, RingError, Subset};

/// Is the (already closed) ideal nilpotent? Iterates set products
/// P_{k+1} = additive closure of P_k * I; the chain is descending, so it
/// stabilizes in at most |I| steps.
fn ideal_is_nilpotent(ring: &FiniteRing, ideal: &Subset) -> bool {
    let zero_only = Subset::from_indices(ring, [ring.zero()]);
    let mut power = ideal.clone();
    loop {
        if power == zero_only {
            return true;
        }
        let mut next = Subset::empty(ring);
        let mut queue: Vec<usize> = vec![ring.zero()];
        next.insert(ring.zero());
        for p in power.iter() {
            for i in ideal.iter() {
                let x = ring.mul(p, i);
                if !next.contains(x) {
                    next.insert(x);
                    queue.push(x);
                }
            }
        }
        // additive closure of the product set
        while let Some(x) = queue.pop() {
            let members: Vec<usize> = next.iter().collect();
            for y in members {
                let s = ring.add(x, y);
                if !next.contains(s) {
                    next.insert(s);
                    queue.push(s);
                }
            }
        }
        if next == power {
            return false;
        }
        power = next;
    }
}

/// One chain step: the sum of all nilpotent ideals, which equals
/// {a : the principal ideal of a is nilpotent} (membership in a nilpotent
/// ideal implies a nilpotent principal ideal, and the sum of two nilpotent
/// ideals is nilpotent).
fn nilpotent_ideal_sum(ring: &FiniteRing) -> Subset {
    let u = units(ring);
    let jac = jacobson_radical(ring, &u);
    let mut w = Subset::empty(ring);
    w.insert(ring.zero());
    for a in jac.iter() {
        if w.contains(a) {
            continue;
        }
        let principal = ideal_generated(ring, &Subset::from_indices(ring, [a]));
        if ideal_is_nilpotent(ring, &principal) {
            w = w.union(&principal);
        }
    }
    w
}

/// The lower nilradical of `ring`, as a subset of its indices.
pub fn lower_nilradical(ring: &FiniteRing, config: &Config) -> Result<Subset> {
    if ring.size() > config.nstar_cap {
        return Err(RingError::SizeCapExceeded {
            size: ring.size() as u128,
            cap: config.nstar_cap,
        });
    }
    let mut current = ring.clone();
    // composite projection original index -> current index
    let mut to_current: Vec<usize> = (0..ring.size()).collect();
    loop {
        let w = nilpotent_ideal_sum(&current);
        if w.card() == 1 {
            let zero = current.zero();
            return Ok(Subset::collect(ring, |a| to_current[a] == zero));
        }
        let (quotient, proj) = quotient_ring(&current, &w, config)?;
        for v in to_current.iter_mut() {
            *v = proj[*v];
        }
        current = quotient;
    }
}
