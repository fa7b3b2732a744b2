//! Elementary symmetric polynomials and the invariant basis of a symmetric
//! power of degree-1 generators.

use super::{GradedElement, Monomial, Ring, RingError};

/// The elementary symmetric polynomial `e_k` in the generators with the given
/// canonical indices: the sum of all squarefree products of `k` of them.
pub fn elementary_symmetric(
    ring: &Ring,
    indices: &[usize],
    k: usize,
) -> Result<GradedElement, RingError> {
    if k == 0 {
        return Ok(ring.one());
    }
    if k > indices.len() {
        return Ok(ring.zero());
    }
    for &i in indices {
        if i >= ring.generators().len() {
            return Err(RingError::SignatureMismatch(format!("no generator #{i}")));
        }
    }
    let mut monomials = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    combinations(ring, indices, k, 0, &mut chosen, &mut monomials);
    Ok(GradedElement::from_monomials(ring, monomials))
}

fn combinations(
    ring: &Ring,
    indices: &[usize],
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Monomial>,
) {
    if chosen.len() == k {
        let nil_count = ring.nilpotent_count();
        let mut nil_mask = 0u64;
        let mut free = Vec::new();
        let mut degree = 0u64;
        for &idx in chosen.iter() {
            let spec = &ring.generators()[idx];
            degree += spec.degree;
            if spec.nilpotent {
                nil_mask |= 1 << idx;
            } else {
                free.push(((idx - nil_count) as u32, 1u64));
            }
        }
        free.sort_unstable();
        out.push(Monomial { degree, nil_mask, free });
        return;
    }
    let needed = k - chosen.len();
    for i in start..=indices.len().saturating_sub(needed) {
        chosen.push(indices[i]);
        combinations(ring, indices, k, i + 1, chosen, out);
        chosen.pop();
    }
}

/// Partitions of `total` into parts of size at most `max_part`, listed with
/// ascending largest part: `[1,1,1]`, `[2,1]`, `[3]`.
pub fn partitions_max_part(total: u64, max_part: u64) -> Vec<Vec<u64>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for largest in 1..=max_part.min(total) {
        for mut rest in partitions_max_part(total - largest, largest) {
            let mut p = vec![largest];
            p.append(&mut rest);
            out.push(p);
        }
    }
    out
}

/// A basis of the degree-`d` symmetric invariants of a polynomial ring on
/// free degree-1 generators: the products `e_p1 * e_p2 * ...` over partitions
/// of `d` with parts at most the number of generators.
///
/// The elementary symmetric polynomials are algebraically independent, so
/// these products are linearly independent and span the invariants.
pub fn symmetric_invariant_basis(ring: &Ring, d: u64) -> Result<Vec<GradedElement>, RingError> {
    if ring.nilpotent_count() > 0 || ring.generators().iter().any(|g| g.degree != 1) {
        return Err(RingError::InvalidSignature(
            "symmetric invariant basis needs free degree-1 generators only".into(),
        ));
    }
    let n = ring.generators().len();
    let indices: Vec<usize> = (0..n).collect();
    let mut basis = Vec::new();
    for partition in partitions_max_part(d, n as u64) {
        let mut value = ring.one();
        for part in partition {
            value = value.mul(&elementary_symmetric(ring, &indices, part as usize)?)?;
        }
        basis.push(value);
    }
    Ok(basis)
}
