//! The curated default corpus. Every member fits under the table cap and is
//! materialized, so analysis sweeps run on dense tables.

use crate::analysis;
use crate::config::Config;
use crate::construct::{
    self, a_ring, b_ring, c_ring, cyclic, dihedral, group_product, group_ring, matrix_ring,
    poly_quotient, product, quaternion8, quotient_ring, s_ring, t_ring, trivial_extension_regular,
    u_ring, upper_triangular, zmod, FiniteGroup,
};
use crate::ring::{FiniteRing, Result, Subset};

/// Build the default corpus under the caps in `config`. Group rings that
/// exceed the table cap are skipped; everything else is fixed.
pub fn default_corpus(config: &Config) -> Result<Vec<FiniteRing>> {
    let mut rings: Vec<FiniteRing> = Vec::new();
    let mut push = |r: FiniteRing| -> Result<()> {
        rings.push(r.materialize(config.table_cap)?);
        Ok(())
    };

    // modular rings
    for n in (2..=16).chain([32, 64]) {
        push(zmod(n, config)?)?;
    }

    // small products
    let f2 = zmod(2, config)?;
    let z4 = zmod(4, config)?;
    let z8 = zmod(8, config)?;
    push(product(&[f2.clone(), f2.clone()], config)?)?;
    push(product(&[f2.clone(), z4.clone()], config)?)?;

    // matrix rings
    let m2f2 = matrix_ring(2, &f2, config)?.materialize(config.table_cap)?;
    push(m2f2.clone())?;

    // upper triangular
    for n in 2..=4 {
        push(upper_triangular(n, &f2, config)?)?;
    }
    push(upper_triangular(2, &z4, config)?)?;
    push(upper_triangular(3, &z4, config)?)?;

    // trivial extensions
    for base in [&f2, &z4, &z8] {
        push(trivial_extension_regular(base, config)?)?;
    }

    // truncated polynomial rings
    for n in 2..=4 {
        push(poly_quotient(&f2, n, config)?)?;
    }
    for n in 2..=3 {
        push(poly_quotient(&z4, n, config)?)?;
    }

    // group rings, subject to the table cap
    let c2 = cyclic(2)?;
    let groups: Vec<FiniteGroup> = vec![
        c2.clone(),
        cyclic(3)?,
        cyclic(4)?,
        group_product(&c2, &c2)?,
        dihedral(4)?,
        quaternion8()?,
    ];
    for base in [&f2, &z4] {
        for group in &groups {
            let size = (base.size() as u128).checked_pow(group.size() as u32);
            match size {
                Some(s) if s <= config.table_cap as u128 => {
                    push(group_ring(base, group, config)?)?;
                }
                _ => {}
            }
        }
    }

    // corners of the 2x2 matrix ring at its nonzero, non-identity
    // idempotents (the identity corner is the matrix ring itself, already a
    // member)
    let m2f2_profile = analysis::profile(&m2f2, config);
    for e in m2f2_profile.idempotents.iter() {
        if e == m2f2.zero() || e == m2f2.one() {
            continue;
        }
        let (corner_ring, _) = construct::corner(&m2f2, e, config)?;
        push(corner_ring)?;
    }

    // generator/relation families and their matrix forms, over F2
    for &(n, m) in &[(2usize, 2usize), (2, 3), (3, 2)] {
        push(a_ring(n, m, &f2, config)?)?;
        push(b_ring(n, m, &f2, config)?)?;
        push(s_ring(n, m, &f2, config)?)?;
        push(t_ring(n, m, &f2, config)?)?;
    }
    for n in [3, 4] {
        push(c_ring(n, &f2, config)?)?;
        push(u_ring(n, &f2, config)?)?;
    }

    // a quotient ring, relabeled to its generator form
    let ideal = construct::ideal_generated(&z8, &Subset::from_indices(&z8, [4]));
    let (q, _) = quotient_ring(&z8, &ideal, config)?;
    push(q.relabel("quot(Zmod(8), ideal(4))".to_string()))?;

    Ok(rings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_contents_match_the_curated_list() {
        let config = Config::default();
        let corpus = default_corpus(&config).unwrap();
        let labels: Vec<&str> = corpus.iter().map(|r| r.label()).collect();

        assert!(labels.contains(&"groupring(F2, C(3))"));
        assert_eq!(
            corpus
                .iter()
                .find(|r| r.label() == "groupring(F2, C(3))")
                .unwrap()
                .size(),
            8
        );
        // oversized group rings stay out under the default caps
        assert!(!labels
            .iter()
            .any(|l| l.starts_with("groupring(Zmod(4), Q8")));
        assert!(!labels
            .iter()
            .any(|l| l.starts_with("groupring(Zmod(4), D4")));
        assert!(labels.contains(&"groupring(F2, Q8)"));
        assert!(labels.contains(&"T(3, Zmod(4))"));
        assert!(labels.contains(&"quot(Zmod(8), ideal(4))"));
        assert!(corpus.len() >= 40);

        // six corners of the 2x2 matrix ring, all of size 2
        let corners: Vec<_> = corpus
            .iter()
            .filter(|r| r.label().starts_with("corner("))
            .collect();
        assert_eq!(corners.len(), 6);
        assert!(corners.iter().all(|r| r.size() == 2));

        // labels are unique (reports key cells by them)
        let mut sorted: Vec<&str> = labels.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), labels.len());

        // every member is materialized and within the table cap
        assert!(corpus.iter().all(|r| r.size() <= config.table_cap));
        assert!(corpus
            .iter()
            .all(|r| r.backend_kind() == crate::ring::BackendKind::Table));
    }
}
