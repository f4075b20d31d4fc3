use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{IntVector, Lattice};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Integer matrix `M` acting on coordinate columns with `Mᵀ G M = G`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Isometry {
    matrix: IntMatrix,
}

impl Isometry {
    /// Checks `Mᵀ G M = G` and `det M = ±1`.
    pub fn new(lattice: &Lattice, matrix: IntMatrix) -> Result<Self> {
        let g = lattice.int_gram()?;
        if !matrix.is_square() || matrix.rows() != lattice.rank() {
            return Err(Error::DimensionMismatch {
                expected: lattice.rank(),
                found: matrix.rows(),
            });
        }
        if &(&matrix.transpose() * g) * &matrix != *g {
            return Err(Error::NotAnIsometry);
        }
        if !matrix.determinant().abs().is_one() {
            return Err(Error::NotAnIsometry);
        }
        Ok(Isometry { matrix })
    }

    /// Wraps a matrix already known to be an isometry.
    pub(crate) fn from_matrix_unchecked(matrix: IntMatrix) -> Self {
        Isometry { matrix }
    }

    pub fn identity(n: usize) -> Self {
        Isometry { matrix: IntMatrix::identity(n) }
    }

    pub fn negation(n: usize) -> Self {
        Isometry { matrix: -&IntMatrix::identity(n) }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry { matrix: &self.matrix * &other.matrix }
    }

    pub fn inverse(&self) -> Isometry {
        Isometry {
            matrix: self
                .matrix
                .integer_inverse()
                .expect("isometries are unimodular"),
        }
    }

    pub fn apply(&self, v: &[BigInt]) -> IntVector {
        self.matrix.mul_vec(v)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Whether this is still an isometry of `lattice` (for re-validation).
    pub fn preserves(&self, lattice: &Lattice) -> Result<bool> {
        let g = lattice.int_gram()?;
        Ok(&(&self.matrix.transpose() * g) * &self.matrix == *g)
    }

    pub fn determinant(&self) -> BigInt {
        self.matrix.determinant()
    }
}
