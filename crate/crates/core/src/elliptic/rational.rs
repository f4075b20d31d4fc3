//! The lattice of the rational elliptic surface with `n + 1` fibres removed.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::lattice::{unit_vector, IntVector, Lattice};
use crate::matrix::IntMatrix;
use crate::roots::{dynkin_e8, DeltaSet, LONG_VECTOR};

/// Basis `α₁ … α_{2n+1}, β₁ … β₈` with its Δ-set and long vector.
#[derive(Debug, Clone)]
pub struct RationalModel {
    pub lattice: Lattice,
    pub delta: DeltaSet,
    /// `ℓ = Σ Lⱼ βⱼ` in lattice coordinates.
    pub long_vector: IntVector,
    pub alphas: Vec<IntVector>,
    pub betas: Vec<IntVector>,
    pub labels: Vec<String>,
}

impl RationalModel {
    /// `ℓ + αᵢ`, a basis of the radical.
    pub fn radical_generators(&self) -> Vec<IntVector> {
        self.alphas
            .iter()
            .map(|a| a.iter().zip(&self.long_vector).map(|(x, y)| x + y).collect())
            .collect()
    }
}

/// Gram block of `a` mutually `−2`-pairing α's followed by −E8, every α
/// meeting β₈ once.
pub(crate) fn summand_gram(alpha_count: usize) -> IntMatrix {
    let n = alpha_count + 8;
    let e8 = dynkin_e8();
    IntMatrix::from_fn(n, n, |r, c| {
        match (r < alpha_count, c < alpha_count) {
            (true, true) => BigInt::from(-2),
            (false, false) => e8[(r - alpha_count, c - alpha_count)].clone(),
            (true, false) => BigInt::from(i64::from(c - alpha_count == 7)),
            (false, true) => BigInt::from(i64::from(r - alpha_count == 7)),
        }
    })
}

/// Builds the rank `9 + 2n` lattice with its `9 + 2n` spheres.
pub fn build_x1_minus_nf(n: usize) -> RationalModel {
    let a = 2 * n + 1;
    let rank = a + 8;
    let lattice = Lattice::from_int(&summand_gram(a))
        .expect("symmetric by construction")
        .with_label(format!("H2(X1-{}f)", n + 1));
    let alphas: Vec<IntVector> = (0..a).map(|i| unit_vector(rank, i)).collect();
    let betas: Vec<IntVector> = (0..8).map(|j| unit_vector(rank, a + j)).collect();
    let mut long_vector = alloc::vec![BigInt::zero(); rank];
    for (j, &c) in LONG_VECTOR.iter().enumerate() {
        long_vector[a + j] = BigInt::from(c);
    }
    let mut labels: Vec<String> = (1..=a).map(|i| format!("alpha{i}")).collect();
    labels.extend((1..=8).map(|j| format!("beta{j}")));
    let vectors: Vec<IntVector> = alphas.iter().chain(&betas).cloned().collect();
    let delta = DeltaSet::new(lattice.clone(), vectors).expect("basis vectors are roots");
    RationalModel {
        lattice,
        delta,
        long_vector,
        alphas,
        betas,
        labels,
    }
}
