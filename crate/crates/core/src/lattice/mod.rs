//! Lattices: free abelian groups with a symmetric bilinear pairing.

mod diagonal;
mod discriminant;
mod isometry;
pub mod normal_form;
mod reflection;

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::scalar::Scalar;

pub use diagonal::{diagonalize, Diagonalization};
pub use discriminant::FiniteAbelianGroup;
pub use isometry::Isometry;
pub use reflection::{
    factor_into_reflections, factor_into_reflections_with_order, positive_orientation_character,
    positive_orientation_character_with_order, reflect, reflect_rational, spinor_norm,
    ReflectionWord,
};

/// Integer coordinates in a lattice basis.
pub type IntVector = Vec<BigInt>;

/// Counts of positive, negative and null directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub null: usize,
}

impl Signature {
    pub fn new(positive: usize, negative: usize, null: usize) -> Self {
        Signature { positive, negative, null }
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative + self.null
    }
}

/// A lattice given by its gram matrix in a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: Vec<Vec<Scalar>>,
    int_gram: Option<IntMatrix>,
    label: Option<String>,
}

/// Quotient of a lattice by its radical, with coordinate maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalQuotient {
    pub lattice: Lattice,
    /// `(rank − null) × rank`; sends coordinates to quotient coordinates.
    pub projection: IntMatrix,
    /// `rank × (rank − null)`; columns lift the quotient basis.
    pub section: IntMatrix,
    /// Saturated basis of the radical.
    pub radical: Vec<IntVector>,
}

impl RadicalQuotient {
    /// The isometry induced on the quotient by an isometry preserving the radical.
    pub fn induced(&self, g: &Isometry) -> Result<Isometry> {
        let m = &(&self.projection * g.matrix()) * &self.section;
        Isometry::new(&self.lattice, m)
    }
}

impl Lattice {
    /// Builds a lattice from a symmetric gram matrix of scalars.
    pub fn new(gram: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = gram.len();
        for row in &gram {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        let int_rows: Option<Vec<Vec<BigInt>>> = gram
            .iter()
            .map(|r| r.iter().map(Scalar::as_integer).collect())
            .collect();
        let int_gram = int_rows.map(|rows| {
            if n == 0 {
                IntMatrix::zeros(0, 0)
            } else {
                IntMatrix::from_rows(&rows)
            }
        });
        Ok(Lattice { gram, int_gram, label: None })
    }

    pub fn from_int(gram: &IntMatrix) -> Result<Self> {
        let rows = (0..gram.rows())
            .map(|r| gram.row(r).iter().map(Scalar::from).collect())
            .collect();
        Lattice::new(rows)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        if rows.is_empty() {
            return Lattice::new(Vec::new());
        }
        Lattice::from_int(&IntMatrix::from_i64(rows))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Scalar>] {
        &self.gram
    }

    pub fn is_symbolic(&self) -> bool {
        self.int_gram.is_none()
    }

    /// Integer gram matrix; fails on symbolic entries.
    pub fn int_gram(&self) -> Result<&IntMatrix> {
        self.int_gram.as_ref().ok_or(Error::SymbolicEntry)
    }

    /// The hyperbolic plane `U`.
    pub fn hyperbolic_plane() -> Self {
        Lattice::from_i64(&[&[0, 1], &[1, 0]]).unwrap().with_label("U")
    }

    /// Diagonal lattice `⟨a₁⟩ ⊕ … ⊕ ⟨aₙ⟩`.
    pub fn diagonal(entries: &[i64]) -> Self {
        let e: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
        Lattice::from_int(&IntMatrix::diagonal(&e)).unwrap()
    }

    /// Orthogonal direct sum of the given lattices.
    pub fn direct_sum(parts: &[&Lattice]) -> Self {
        let n: usize = parts.iter().map(|p| p.rank()).sum();
        let mut gram = alloc::vec![alloc::vec![Scalar::zero(); n]; n];
        let mut off = 0;
        for p in parts {
            for (i, row) in p.gram.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    gram[off + i][off + j] = x.clone();
                }
            }
            off += p.rank();
        }
        Lattice::new(gram).unwrap()
    }

    /// Same group with the pairing multiplied by `factor`.
    pub fn scaled(&self, factor: i64) -> Self {
        let f = Scalar::from(factor);
        let gram = self
            .gram
            .iter()
            .map(|r| r.iter().map(|x| &f * x).collect())
            .collect();
        Lattice::new(gram).unwrap()
    }

    /// Lattice spanned by the given vectors, with their mutual pairings.
    pub fn sublattice(&self, basis: &[IntVector]) -> Result<Lattice> {
        let g = self.int_gram()?;
        let images: Vec<IntVector> = basis.iter().map(|b| g.mul_vec(b)).collect();
        let rows: Vec<Vec<BigInt>> = basis
            .iter()
            .map(|x| images.iter().map(|gy| dot(x, gy)).collect())
            .collect();
        if rows.is_empty() {
            return Lattice::new(Vec::new());
        }
        Lattice::from_int(&IntMatrix::from_rows(&rows))
    }

    fn check_len(&self, v: usize) -> Result<()> {
        if v == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.rank(), found: v })
        }
    }

    /// `xᵀ · gram · y` over scalars.
    pub fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        let mut acc = Scalar::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || self.gram[i][j].is_zero() {
                    continue;
                }
                acc += &(xi * &self.gram[i][j]) * yj;
            }
        }
        Ok(acc)
    }

    /// Integer pairing of integer vectors.
    pub fn pair_int(&self, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        Ok(self.int_gram()?.bilinear(x, y))
    }

    pub fn norm(&self, x: &[BigInt]) -> Result<BigInt> {
        self.pair_int(x, x)
    }

    /// Saturated integer basis of the radical (empty iff nondegenerate).
    pub fn radical(&self) -> Result<Vec<IntVector>> {
        Ok(normal_form::kernel(self.int_gram()?))
    }

    pub fn signature(&self) -> Result<Signature> {
        Ok(diagonalize(self.int_gram()?, None).signature())
    }

    pub fn determinant(&self) -> Result<BigInt> {
        Ok(self.int_gram()?.determinant())
    }

    pub fn is_nondegenerate(&self) -> Result<bool> {
        Ok(!self.determinant()?.is_zero())
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.determinant()?.abs().is_one())
    }

    pub fn is_even(&self) -> Result<bool> {
        let g = self.int_gram()?;
        Ok((0..self.rank()).all(|i| g[(i, i)].is_even()))
    }

    pub fn is_negative_definite(&self) -> Result<bool> {
        let s = self.signature()?;
        Ok(s.negative == self.rank())
    }

    pub fn is_definite(&self) -> Result<bool> {
        let s = self.signature()?;
        Ok(s.negative == self.rank() || s.positive == self.rank())
    }

    /// Nondegenerate quotient `L / rad(L)` with projection and section maps.
    pub fn quotient_by_radical(&self) -> Result<RadicalQuotient> {
        let g = self.int_gram()?;
        let n = self.rank();
        let radical = normal_form::kernel(g);
        let r = radical.len();
        if r == 0 {
            return Ok(RadicalQuotient {
                lattice: self.clone(),
                projection: IntMatrix::identity(n),
                section: IntMatrix::identity(n),
                radical,
            });
        }
        // SNF of the radical basis as columns; the radical is saturated, so
        // left⁻¹ is a basis of ℤⁿ whose first r columns span the radical.
        let s = normal_form::smith(&IntMatrix::from_rows(&radical).transpose());
        let left_inv = s
            .left
            .integer_inverse()
            .expect("Smith transforms are unimodular");
        let complement: Vec<usize> = (r..n).collect();
        let all: Vec<usize> = (0..n).collect();
        let section = left_inv.select(&all, &complement);
        let projection = s.left.select(&complement, &all);
        let quotient_gram = &(&section.transpose() * g) * &section;
        let mut lattice = Lattice::from_int(&quotient_gram)?;
        lattice.label = self.label.as_ref().map(|l| alloc::format!("{l}/rad"));
        Ok(RadicalQuotient {
            lattice,
            projection,
            section,
            radical,
        })
    }

    /// Saturated basis of `{x : ⟨x, s⟩ = 0 for all s}`.
    pub fn orthogonal_complement(&self, vectors: &[IntVector]) -> Result<Vec<IntVector>> {
        let g = self.int_gram()?;
        let n = self.rank();
        if vectors.is_empty() {
            return Ok((0..n)
                .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
                .collect());
        }
        for v in vectors {
            self.check_len(v.len())?;
        }
        let rows: Vec<IntVector> = vectors.iter().map(|v| g.vec_mul(v)).collect();
        Ok(normal_form::kernel(&IntMatrix::from_rows(&rows)))
    }

    /// `Hom(L, ℤ) / L` for nondegenerate `L`.
    pub fn discriminant_group(&self) -> Result<FiniteAbelianGroup> {
        let g = self.int_gram()?;
        let s = normal_form::smith(g);
        if s.rank < self.rank() {
            return Err(Error::Degenerate { radical_rank: self.rank() - s.rank });
        }
        Ok(FiniteAbelianGroup::from_divisors(&s.elementary_divisors()))
    }

    /// Whether `g` induces the identity on the discriminant group.
    pub fn acts_trivially_on_discriminant(&self, g: &Isometry) -> Result<bool> {
        let gram = self.int_gram()?;
        let n = self.rank();
        self.check_len(g.dim())?;
        let s = normal_form::smith(gram);
        if s.rank < n {
            return Err(Error::Degenerate { radical_rank: n - s.rank });
        }
        // generators of the dual modulo L are right·eᵢ / dᵢ
        let m_minus_id = g.matrix() - &IntMatrix::identity(n);
        for i in 0..n {
            let di = &s.diagonal[(i, i)];
            if di.is_one() {
                continue;
            }
            let image = m_minus_id.mul_vec(&s.right.column(i));
            if image.iter().any(|x| !x.is_multiple_of(di)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `⟨k, x⟩ ≡ ⟨x, x⟩ (mod 2)` for every basis vector `x`.
    pub fn is_characteristic(&self, k: &[BigInt]) -> Result<bool> {
        self.check_len(k.len())?;
        let g = self.int_gram()?;
        let gk = g.mul_vec(k);
        Ok((0..self.rank()).all(|i| (&gk[i] - &g[(i, i)]).is_even()))
    }

    /// Largest `t` with `⟨k, ·⟩ ∈ t·Hom(L, ℤ)` when `L` is unimodular; in
    /// general the gcd of the pairings of `k` with the basis.
    pub fn divisibility(&self, k: &[BigInt]) -> Result<BigInt> {
        self.check_len(k.len())?;
        let gk = self.int_gram()?.mul_vec(k);
        Ok(crate::matrix::gcd_of(&gk))
    }

    /// Short textual summary used in reports.
    pub fn describe(&self) -> String {
        match &self.label {
            Some(l) => alloc::format!("{l} (rank {})", self.rank()),
            None => alloc::format!("rank {}", self.rank()),
        }
    }
}

pub(crate) fn dot(x: &[BigInt], y: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc += a * b;
        }
    }
    acc
}

/// Unit vector `eᵢ` of length `n`.
pub fn unit_vector(n: usize, i: usize) -> IntVector {
    let mut v = alloc::vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}
