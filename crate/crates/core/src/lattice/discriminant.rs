use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::normal_form::smith;
use crate::matrix::IntMatrix;

/// Finite abelian group `ℤ_{d₁} ⊕ … ⊕ ℤ_{d_r}` with `d₁ | d₂ | … | d_r`, all `dᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup::default()
    }

    /// From elementary divisors of a Smith form; units are dropped.
    pub fn from_divisors(divisors: &[BigInt]) -> Self {
        let invariant_factors = divisors
            .iter()
            .map(Signed::abs)
            .filter(|d| !d.is_one())
            .collect::<Vec<_>>();
        debug_assert!(invariant_factors.iter().all(|d| !d.is_zero()));
        FiniteAbelianGroup { invariant_factors }
    }

    /// Cokernel of the relation rows `relations` in `ℤⁿ`, `n = relations.cols()`.
    /// Returns `None` when the cokernel is infinite.
    pub fn from_relations(relations: &IntMatrix) -> Option<Self> {
        let s = smith(relations);
        if s.rank < relations.cols() {
            return None;
        }
        Some(FiniteAbelianGroup::from_divisors(&s.elementary_divisors()))
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        for (i, d) in self.invariant_factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "Z/{d}")?;
        }
        Ok(())
    }
}
