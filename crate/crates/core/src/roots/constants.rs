//! Fixed Dynkin data.
//!
//! Labeling of −E8: β₂ – β₃ – β₄ – β₅ – β₆ – β₇ – β₈ is a chain and β₁ is
//! attached to β₄. With this labeling the long vector
//! `ℓ = 3β₁ + 2β₂ + 4β₃ + 6β₄ + 5β₅ + 4β₆ + 3β₇ + 2β₈` satisfies
//! `ℓ·β₈ = −1`, `ℓ·βⱼ = 0` for `j < 8` and `ℓ² = −2`. All off-diagonal
//! edge entries are `+1` (the form is negative definite).

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::lattice::{IntVector, Lattice};
use crate::matrix::IntMatrix;

/// Edges of the E8 diagram, 0-based node indices.
pub const E8_EDGES: [(usize, usize); 7] = [(0, 3), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];

/// Coefficients of the long vector ℓ in the β-basis.
pub const LONG_VECTOR: [i64; 8] = [3, 2, 4, 6, 5, 4, 3, 2];

/// Extra E10 edges: β₈ – β₉ – β₁₀.
pub const E10_EXTRA_EDGES: [(usize, usize); 2] = [(7, 8), (8, 9)];

/// Pairing pattern of the six λ-vectors, diagonal −2.
pub const DIAGRAM_LAMBDA: [[i64; 6]; 6] = [
    [-2, 1, 0, 0, 0, 0],
    [1, -2, -2, 1, -2, 0],
    [0, -2, -2, 1, -2, 0],
    [0, 1, 1, -2, 1, 0],
    [0, -2, -2, 1, -2, 1],
    [0, 0, 0, 0, 1, -2],
];

fn dynkin_gram(n: usize, edges: &[(usize, usize)]) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = BigInt::from(-2);
    }
    for &(a, b) in edges {
        m[(a, b)] = BigInt::from(1);
        m[(b, a)] = BigInt::from(1);
    }
    m
}

/// Gram matrix of −E8 in the fixed labeling.
pub fn dynkin_e8() -> IntMatrix {
    dynkin_gram(8, &E8_EDGES)
}

/// Gram matrix of −E10: −E8 extended by β₉, β₁₀.
pub fn dynkin_e10() -> IntMatrix {
    let edges: Vec<(usize, usize)> = E8_EDGES.iter().chain(&E10_EXTRA_EDGES).copied().collect();
    dynkin_gram(10, &edges)
}

pub fn negative_e8() -> Lattice {
    Lattice::from_int(&dynkin_e8()).unwrap().with_label("-E8")
}

pub fn negative_e10() -> Lattice {
    Lattice::from_int(&dynkin_e10()).unwrap().with_label("-E10")
}

pub fn diagram_lambda() -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = DIAGRAM_LAMBDA
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    IntMatrix::from_rows(&rows)
}

pub fn long_vector() -> IntVector {
    LONG_VECTOR.iter().map(|&x| BigInt::from(x)).collect()
}
