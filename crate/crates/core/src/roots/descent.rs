//! Writing isometries of negative definite lattices as words in root reflections.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::enumerate::enumerate_vectors_of_square;
use crate::error::{Error, Result};
use crate::lattice::{dot, Isometry, Lattice, ReflectionWord};
use crate::matrix::sup_norm;

/// Descent on a generic height functional.
///
/// Positive roots are those with `φ(r) > 0` for `φ(x) = Σ wᵢ xᵢ`,
/// `wᵢ = (2C+1)ⁱ`, `C` the largest root coordinate; no root has `φ = 0`.
/// While some positive root `r` has `φ(h r) < 0`, replace `h` by `h ∘ s_r`,
/// which strictly shortens `h` in the Weyl group. The word is accepted only
/// if `h` ends at the identity.
pub fn word_in_root_reflections(lattice: &Lattice, g: &Isometry) -> Result<ReflectionWord> {
    let gram = lattice.int_gram()?;
    let n = lattice.rank();
    if g.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: g.dim() });
    }
    if !lattice.is_negative_definite()? {
        return Err(Error::NotNegativeDefinite);
    }
    if !g.preserves(lattice)? {
        return Err(Error::NotAnIsometry);
    }
    let roots = enumerate_vectors_of_square(lattice, &BigInt::from(-2), None)?;
    let c = roots.iter().map(|r| sup_norm(r)).max().unwrap_or_default();
    let base = BigInt::from(2) * c + 1;
    let mut weights = Vec::with_capacity(n);
    let mut w = BigInt::from(1);
    for _ in 0..n {
        weights.push(w.clone());
        w *= &base;
    }
    let positive: Vec<(Vec<BigInt>, Vec<BigInt>)> = roots
        .into_iter()
        .filter(|r| dot(&weights, r).is_positive())
        .map(|r| {
            let gr = gram.mul_vec(&r);
            (r, gr)
        })
        .collect();
    // ψ = φ ∘ h as a row vector
    let mut h = g.matrix().clone();
    let mut psi = h.vec_mul(&weights);
    let budget = 10 * 2 * positive.len();
    let mut used: Vec<Vec<BigInt>> = Vec::new();
    let mut steps = 0;
    while let Some((r, gr)) = positive.iter().find(|(r, _)| dot(&psi, r).is_negative()) {
        if steps >= budget {
            return Err(Error::NotInGroup { steps });
        }
        // h ← h ∘ s_r with s_r(x) = x + ⟨x,r⟩ r
        let pr = dot(&psi, r);
        for (p, a) in psi.iter_mut().zip(gr) {
            if !a.is_zero() {
                *p += &pr * a;
            }
        }
        let hr = h.mul_vec(r);
        for i in 0..n {
            if hr[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !gr[j].is_zero() {
                    let d = &hr[i] * &gr[j];
                    h[(i, j)] += d;
                }
            }
        }
        used.push(r.clone());
        steps += 1;
    }
    if !h.is_identity() {
        return Err(Error::NotInGroup { steps });
    }
    // g ∘ s_{r₁} ∘ ⋯ ∘ s_{r_k} = id, so g = s_{r_k} ∘ ⋯ ∘ s_{r₁}
    used.reverse();
    Ok(ReflectionWord { factors: used })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{reflect, unit_vector};
    use crate::roots::negative_e8;

    #[test]
    fn minus_identity_on_e8() {
        let e8 = negative_e8();
        let g = Isometry::negation(8);
        let w = word_in_root_reflections(&e8, &g).unwrap();
        assert_eq!(w.len(), 120);
        assert!(w.round_trips(&e8, &g).unwrap());
    }

    #[test]
    fn short_words() {
        let e8 = negative_e8();
        assert!(word_in_root_reflections(&e8, &Isometry::identity(8)).unwrap().is_empty());
        let s = reflect(&e8, &unit_vector(8, 3)).unwrap();
        let w = word_in_root_reflections(&e8, &s).unwrap();
        assert_eq!(w.len(), 1);
        assert!(w.round_trips(&e8, &s).unwrap());
    }

    #[test]
    fn outer_automorphism_is_rejected() {
        // swapping the two roots of A1 + A1 is an isometry outside the Weyl group
        let l = Lattice::diagonal(&[-2, -2]);
        let swap = Isometry::new(&l, crate::matrix::IntMatrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(matches!(word_in_root_reflections(&l, &swap), Err(Error::NotInGroup { .. })));
        let u = Lattice::hyperbolic_plane();
        assert_eq!(
            word_in_root_reflections(&u, &Isometry::identity(2)),
            Err(Error::NotNegativeDefinite)
        );
    }
}
