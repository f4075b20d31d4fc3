//! Reflections, Cartan–Dieudonné factorization, spinor norm and the
//! orientation character on positive directions.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::diagonal::diagonalize;
use super::{dot, IntVector, Isometry, Lattice};
use crate::error::{Error, Result};
use crate::matrix::{primitive_integer_vector, IntMatrix, RatMatrix};

/// A product of reflections `s_{v₁} ∘ s_{v₂} ∘ … ∘ s_{v_t}`.
///
/// Factors are stored as primitive integer vectors; a reflection only
/// depends on the line spanned by its vector.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReflectionWord {
    pub factors: Vec<IntVector>,
}

impl ReflectionWord {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The composed rational matrix.
    pub fn compose(&self, lattice: &Lattice) -> Result<RatMatrix> {
        let mut out = RatMatrix::identity(lattice.rank());
        for v in &self.factors {
            out = &out * &reflect_rational(lattice, v)?;
        }
        Ok(out)
    }

    /// `Π sign(−⟨vᵢ, vᵢ⟩)`.
    pub fn spinor_norm(&self, lattice: &Lattice) -> Result<i8> {
        let mut theta = 1i8;
        for v in &self.factors {
            let q = lattice.norm(v)?;
            if q.is_zero() {
                return Err(Error::IsotropicVector);
            }
            if q.is_positive() {
                theta = -theta;
            }
        }
        Ok(theta)
    }

    /// Whether the word composes exactly to `g`.
    pub fn round_trips(&self, lattice: &Lattice, g: &Isometry) -> Result<bool> {
        Ok(self.compose(lattice)? == g.matrix().to_rational())
    }
}

/// Rational matrix of `x ↦ x − 2⟨x,v⟩/⟨v,v⟩ · v`.
pub fn reflect_rational(lattice: &Lattice, v: &[BigInt]) -> Result<RatMatrix> {
    let g = lattice.int_gram()?;
    if v.len() != lattice.rank() {
        return Err(Error::DimensionMismatch { expected: lattice.rank(), found: v.len() });
    }
    let gv = g.mul_vec(v);
    let q = dot(v, &gv);
    if q.is_zero() {
        return Err(Error::IsotropicVector);
    }
    let n = v.len();
    let two = BigInt::from(2);
    Ok(RatMatrix::from_fn(n, n, |r, c| {
        let delta = if r == c { BigInt::from(1) } else { BigInt::zero() };
        let num = &delta * &q - &two * &v[r] * &gv[c];
        BigRational::new(num, q.clone())
    }))
}

/// The reflection `s_v` as an integral isometry.
pub fn reflect(lattice: &Lattice, v: &[BigInt]) -> Result<Isometry> {
    let g = lattice.int_gram()?;
    if v.len() != lattice.rank() {
        return Err(Error::DimensionMismatch { expected: lattice.rank(), found: v.len() });
    }
    let gv = g.mul_vec(v);
    let q = dot(v, &gv);
    if q.is_zero() {
        return Err(Error::IsotropicVector);
    }
    // 2⟨x,v⟩/⟨v,v⟩ must be integral for every basis vector x
    let two = BigInt::from(2);
    let coeffs: Option<Vec<BigInt>> = gv
        .iter()
        .map(|p| {
            let t = &two * p;
            t.is_multiple_of(&q).then(|| t / &q)
        })
        .collect();
    let coeffs = coeffs.ok_or(Error::NotIntegral)?;
    let n = v.len();
    let m = IntMatrix::from_fn(n, n, |r, c| {
        let delta = if r == c { BigInt::from(1) } else { BigInt::zero() };
        delta - &v[r] * &coeffs[c]
    });
    Ok(Isometry::from_matrix_unchecked(m))
}

/// Cartan–Dieudonné factorization with the default pivot order.
pub fn factor_into_reflections(lattice: &Lattice, g: &Isometry) -> Result<ReflectionWord> {
    factor_into_reflections_with_order(lattice, g, None)
}

/// Cartan–Dieudonné factorization over ℚ along an orthogonal basis obtained
/// by diagonalizing with the given pivot order.
///
/// For each basis vector `x` with current image `y = h(x) ≠ x`, apply
/// `s_{x−y}` when `x − y` is anisotropic, otherwise `s_x ∘ s_{x+y}`. The
/// resulting word has length at most `2·rank`.
pub fn factor_into_reflections_with_order(
    lattice: &Lattice,
    g: &Isometry,
    order: Option<&[usize]>,
) -> Result<ReflectionWord> {
    let gram = lattice.int_gram()?;
    let n = lattice.rank();
    if g.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: g.dim() });
    }
    if !g.preserves(lattice)? {
        return Err(Error::NotAnIsometry);
    }
    let diag = diagonalize(gram, order);
    let sig = diag.signature();
    if sig.null > 0 {
        return Err(Error::Degenerate { radical_rank: sig.null });
    }
    let mut h = g.matrix().to_rational();
    let mut applied: Vec<IntVector> = Vec::new();
    for k in 0..n {
        let x = primitive_integer_vector(diag.basis.row(k));
        let xr: Vec<BigRational> = x.iter().map(|a| BigRational::from_integer(a.clone())).collect();
        let y = h.mul_vec(&xr);
        if y == xr {
            continue;
        }
        let diff: Vec<BigRational> = xr.iter().zip(&y).map(|(a, b)| a - b).collect();
        let diff = primitive_integer_vector(&diff);
        if !lattice.norm(&diff)?.is_zero() {
            apply_left(gram, &mut h, &diff);
            applied.push(diff);
        } else {
            let sum: Vec<BigRational> = xr.iter().zip(&y).map(|(a, b)| a + b).collect();
            let sum = primitive_integer_vector(&sum);
            apply_left(gram, &mut h, &sum);
            applied.push(sum);
            apply_left(gram, &mut h, &x);
            applied.push(x);
        }
    }
    debug_assert!(h.is_identity());
    // s_{r_t} ⋯ s_{r_1} g = id, so g = s_{r_1} ⋯ s_{r_t}
    Ok(ReflectionWord { factors: applied })
}

/// `h ← s_r ∘ h`.
fn apply_left(gram: &IntMatrix, h: &mut RatMatrix, r: &[BigInt]) {
    let gr = gram.mul_vec(r);
    let q = dot(r, &gr);
    let grr: Vec<BigRational> = gr.iter().map(|a| BigRational::from_integer(a.clone())).collect();
    let w = h.vec_mul(&grr);
    let scale = BigRational::new(BigInt::from(2), q);
    let n = r.len();
    for i in 0..n {
        if r[i].is_zero() {
            continue;
        }
        let f = &scale * BigRational::from_integer(r[i].clone());
        for j in 0..n {
            if !w[j].is_zero() {
                let d = &f * &w[j];
                h[(i, j)] -= d;
            }
        }
    }
}

/// Real spinor norm, normalized so that reflections in vectors of negative
/// square have norm `+1`.
pub fn spinor_norm(lattice: &Lattice, g: &Isometry) -> Result<i8> {
    factor_into_reflections(lattice, g)?.spinor_norm(lattice)
}

/// Sign of the determinant of `g` compressed to the positive directions of
/// a diagonalizing basis.
pub fn positive_orientation_character(lattice: &Lattice, g: &Isometry) -> Result<i8> {
    positive_orientation_character_with_order(lattice, g, None)
}

pub fn positive_orientation_character_with_order(
    lattice: &Lattice,
    g: &Isometry,
    order: Option<&[usize]>,
) -> Result<i8> {
    let gram = lattice.int_gram()?;
    let n = lattice.rank();
    if g.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: g.dim() });
    }
    let diag = diagonalize(gram, order);
    let sig = diag.signature();
    if sig.null > 0 {
        return Err(Error::Degenerate { radical_rank: sig.null });
    }
    if sig.positive == 0 {
        return Err(Error::NoPositiveDirection);
    }
    let cols = diag.basis.transpose();
    let inv = cols.inverse().expect("diagonalizing basis is invertible");
    let in_basis = &(&inv * &g.matrix().to_rational()) * &cols;
    let pos = diag.positive_indices();
    let det = in_basis.select(&pos, &pos).determinant();
    debug_assert!(!det.is_zero());
    Ok(if det.is_positive() { 1 } else { -1 })
}
