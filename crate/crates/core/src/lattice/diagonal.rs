//! Rational congruence diagonalization of symmetric integer matrices.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::Signature;
use crate::matrix::{IntMatrix, RatMatrix};

/// Rows of `basis` are pairwise orthogonal rational vectors with squares `squares`:
/// `basis · G · basisᵀ = diag(squares)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagonalization {
    pub basis: RatMatrix,
    pub squares: Vec<BigRational>,
}

impl Diagonalization {
    pub fn signature(&self) -> Signature {
        let mut s = Signature::new(0, 0, 0);
        for q in &self.squares {
            if q.is_positive() {
                s.positive += 1;
            } else if q.is_negative() {
                s.negative += 1;
            } else {
                s.null += 1;
            }
        }
        s
    }

    pub fn positive_indices(&self) -> Vec<usize> {
        (0..self.squares.len()).filter(|&i| self.squares[i].is_positive()).collect()
    }
}

/// Symmetric Gaussian elimination by congruence.
///
/// Pivots are taken in `order` (default `0..n`), choosing the first index
/// with a nonzero diagonal entry. When the remaining block has zero
/// diagonal but a nonzero entry `(i, j)`, row and column `j` are added to
/// `i` first.
pub fn diagonalize(gram: &IntMatrix, order: Option<&[usize]>) -> Diagonalization {
    let n = gram.rows();
    let default: Vec<usize> = (0..n).collect();
    let order = order.unwrap_or(&default);
    debug_assert_eq!(order.len(), n);
    let mut a = gram.to_rational();
    let mut t = RatMatrix::identity(n);
    let mut remaining: Vec<usize> = order.to_vec();
    let mut pivots = Vec::with_capacity(n);
    while !remaining.is_empty() {
        let pivot = match remaining.iter().position(|&k| !a[(k, k)].is_zero()) {
            Some(p) => remaining.remove(p),
            None => {
                let pair = remaining.iter().enumerate().find_map(|(ii, &i)| {
                    remaining
                        .iter()
                        .find(|&&j| j != i && !a[(i, j)].is_zero())
                        .map(|&j| (ii, i, j))
                });
                let Some((ii, i, j)) = pair else { break };
                add_congruent(&mut a, &mut t, i, j, &BigRational::from_integer(BigInt::from(1)));
                remaining.remove(ii)
            }
        };
        let p = a[(pivot, pivot)].clone();
        for &r in &remaining {
            if a[(r, pivot)].is_zero() {
                continue;
            }
            let f = -(&a[(r, pivot)] / &p);
            add_congruent(&mut a, &mut t, r, pivot, &f);
        }
        pivots.push(pivot);
    }
    pivots.extend(remaining);
    let basis = t.select(&pivots, &(0..n).collect::<Vec<_>>());
    let squares = pivots.iter().map(|&k| a[(k, k)].clone()).collect();
    Diagonalization { basis, squares }
}

/// Row `target += f · row source`, and the same on columns.
fn add_congruent(a: &mut RatMatrix, t: &mut RatMatrix, target: usize, source: usize, f: &BigRational) {
    let n = a.rows();
    for c in 0..n {
        if !a[(source, c)].is_zero() {
            let d = f * &a[(source, c)];
            a[(target, c)] += d;
        }
        if !t[(source, c)].is_zero() {
            let d = f * &t[(source, c)];
            t[(target, c)] += d;
        }
    }
    for r in 0..n {
        if !a[(r, source)].is_zero() {
            let d = f * &a[(r, source)];
            a[(r, target)] += d;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: &IntMatrix, order: Option<&[usize]>) -> Diagonalization {
        let d = diagonalize(g, order);
        let prod = &(&d.basis * &g.to_rational()) * &d.basis.transpose();
        assert_eq!(prod, RatMatrix::diagonal(&d.squares));
        assert!(!d.basis.determinant().is_zero());
        d
    }

    #[test]
    fn hyperbolic_plane_needs_the_fix() {
        let u = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(check(&u, None).signature(), Signature::new(1, 1, 0));
    }

    #[test]
    fn degenerate_and_orders() {
        let g = IntMatrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[1, 0, -2]]);
        assert_eq!(check(&g, None).signature(), Signature::new(1, 1, 1));
        assert_eq!(check(&g, Some(&[2, 1, 0])).signature(), Signature::new(1, 1, 1));
    }
}
