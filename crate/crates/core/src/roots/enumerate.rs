//! Exact enumeration of lattice vectors of a given square.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{IntVector, Lattice};
use crate::matrix::{sup_norm, IntMatrix};

/// All `v` with `⟨v,v⟩ = square`, sorted lexicographically.
///
/// Definite lattices are enumerated completely (Fincke–Pohst over ℚ); the
/// optional bound then only filters. Indefinite or degenerate lattices need
/// a coordinate bound and are searched in the box `|vᵢ| ≤ bound`.
pub fn enumerate_vectors_of_square(
    lattice: &Lattice,
    square: &BigInt,
    bound: Option<&BigInt>,
) -> Result<Vec<IntVector>> {
    let g = lattice.int_gram()?;
    let sig = lattice.signature()?;
    let n = lattice.rank();
    let mut out = if n > 0 && sig.negative == n {
        short_vectors(&-g, &-square)
    } else if n > 0 && sig.positive == n {
        short_vectors(g, square)
    } else if n == 0 {
        if square.is_zero() {
            vec![Vec::new()]
        } else {
            Vec::new()
        }
    } else {
        let b = bound.ok_or(Error::BoundRequired)?;
        box_search(g, square, b)
    };
    if let Some(b) = bound {
        out.retain(|v| &sup_norm(v) <= b);
    }
    out.sort();
    Ok(out)
}

/// Vectors of exact norm `target` for a positive definite gram.
fn short_vectors(gram: &IntMatrix, target: &BigInt) -> Vec<IntVector> {
    let n = gram.rows();
    if target.is_negative() {
        return Vec::new();
    }
    if target.is_zero() {
        return vec![vec![BigInt::zero(); n]];
    }
    let q = quadratic_decomposition(gram);
    let mut x = vec![BigInt::zero(); n];
    let mut out = Vec::new();
    let t = BigRational::from_integer(target.clone());
    descend(&q, n, &t, &mut x, &mut out);
    out
}

/// Coefficients with `Q(x) = Σᵢ q_ii (xᵢ + Σ_{j>i} q_ij x_j)²`.
fn quadratic_decomposition(gram: &IntMatrix) -> Vec<Vec<BigRational>> {
    let n = gram.rows();
    let mut q: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(gram[(i, j)].clone())).collect())
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                let d = &q[k][i] * &q[i][l];
                q[k][l] -= d;
            }
        }
    }
    q
}

fn descend(
    q: &[Vec<BigRational>],
    level: usize,
    remaining: &BigRational,
    x: &mut IntVector,
    out: &mut Vec<IntVector>,
) {
    if level == 0 {
        if remaining.is_zero() {
            out.push(x.clone());
        }
        return;
    }
    let i = level - 1;
    let n = x.len();
    let mut center = BigRational::zero();
    for j in i + 1..n {
        if !x[j].is_zero() {
            center -= &q[i][j] * BigRational::from_integer(x[j].clone());
        }
    }
    let radius_sq = remaining / &q[i][i];
    let slack = radius_sq.floor().to_integer().sqrt() + BigInt::from(1);
    let lo = center.floor().to_integer() - &slack;
    let hi = center.ceil().to_integer() + &slack;
    let mut xi = lo;
    while xi <= hi {
        let diff = BigRational::from_integer(xi.clone()) - &center;
        let used = &q[i][i] * &diff * &diff;
        if used <= *remaining {
            x[i] = xi.clone();
            let rest = remaining - used;
            descend(q, i, &rest, x, out);
        }
        xi += 1;
    }
    x[i] = BigInt::zero();
}

fn box_search(gram: &IntMatrix, square: &BigInt, bound: &BigInt) -> Vec<IntVector> {
    let n = gram.rows();
    let mut out = Vec::new();
    let mut x = vec![-bound.clone(); n];
    loop {
        if gram.bilinear(&x, &x) == *square {
            out.push(x.clone());
        }
        // odometer increment
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if x[i] < *bound {
                x[i] += 1;
                break;
            }
            x[i] = -bound.clone();
        }
    }
}
