//! Hermite and Smith normal forms over the integers, with integer kernels
//! and linear Diophantine solving built on top.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;

/// Row-style Hermite normal form: `transform · input = hnf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hermite {
    pub hnf: IntMatrix,
    pub transform: IntMatrix,
    pub rank: usize,
    /// Pivot column of each nonzero row.
    pub pivots: Vec<usize>,
}

/// Smith normal form: `left · input · right = diagonal`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub rank: usize,
}

impl Smith {
    /// Diagonal entries `d₁ | d₂ | … | d_rank`, all positive.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.diagonal[(i, i)].clone()).collect()
    }
}

/// Extended gcd with a nonnegative gcd: `x·a + y·b = g`.
fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Unimodular `[x, y; u, v]` sending `(a, b)` to `(g, 0)`. Plain
/// elimination when `a | b`, so that a pivot dividing its row is left alone.
fn elimination(a: &BigInt, b: &BigInt) -> [BigInt; 4] {
    if !a.is_zero() && b.is_multiple_of(a) {
        return [BigInt::one(), BigInt::zero(), -(b / a), BigInt::one()];
    }
    let (g, x, y) = ext_gcd(a, b);
    [x, y, -(b / &g), a / &g]
}

/// Replace rows `p`, `r` of `m` by `x·p + y·r` and `u·p + v·r`.
fn combine_rows(m: &mut IntMatrix, p: usize, r: usize, coeffs: [&BigInt; 4]) {
    let [x, y, u, v] = coeffs;
    for c in 0..m.cols() {
        let a = m[(p, c)].clone();
        let b = m[(r, c)].clone();
        if a.is_zero() && b.is_zero() {
            continue;
        }
        m[(p, c)] = x * &a + y * &b;
        m[(r, c)] = u * &a + v * &b;
    }
}

fn combine_cols(m: &mut IntMatrix, p: usize, r: usize, coeffs: [&BigInt; 4]) {
    let [x, y, u, v] = coeffs;
    for row in 0..m.rows() {
        let a = m[(row, p)].clone();
        let b = m[(row, r)].clone();
        if a.is_zero() && b.is_zero() {
            continue;
        }
        m[(row, p)] = x * &a + y * &b;
        m[(row, r)] = u * &a + v * &b;
    }
}

fn add_row_multiple(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for c in 0..m.cols() {
        if !m[(source, c)].is_zero() {
            let d = factor * &m[(source, c)];
            m[(target, c)] += d;
        }
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for c in 0..m.cols() {
        let v = -m[(r, c)].clone();
        m[(r, c)] = v;
    }
}

/// Row Hermite normal form with positive pivots and reduced entries above
/// each pivot in `[0, pivot)`.
pub fn hermite(input: &IntMatrix) -> Hermite {
    let rows = input.rows();
    let mut h = input.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..input.cols() {
        if pr == rows {
            break;
        }
        for r in pr + 1..rows {
            if h[(r, col)].is_zero() {
                continue;
            }
            let [x, y, u2, v2] = elimination(&h[(pr, col)], &h[(r, col)]);
            combine_rows(&mut h, pr, r, [&x, &y, &u2, &v2]);
            combine_rows(&mut u, pr, r, [&x, &y, &u2, &v2]);
        }
        if h[(pr, col)].is_zero() {
            continue;
        }
        if h[(pr, col)].is_negative() {
            negate_row(&mut h, pr);
            negate_row(&mut u, pr);
        }
        let pivot = h[(pr, col)].clone();
        for r in 0..pr {
            let q = -h[(r, col)].div_floor(&pivot);
            add_row_multiple(&mut h, r, pr, &q);
            add_row_multiple(&mut u, r, pr, &q);
        }
        pivots.push(col);
        pr += 1;
    }
    Hermite {
        hnf: h,
        transform: u,
        rank: pr,
        pivots,
    }
}

/// Smith normal form with unimodular transforms.
pub fn smith(input: &IntMatrix) -> Smith {
    let (rows, cols) = (input.rows(), input.cols());
    let mut d = input.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if d[(r, c)].is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((br, bc)) => d[(r, c)].abs() < d[(br, bc)].abs(),
                };
                if better {
                    best = Some((r, c));
                }
            }
        }
        let Some((br, bc)) = best else { break };
        d.swap_rows(t, br);
        left.swap_rows(t, br);
        d.swap_cols(t, bc);
        right.swap_cols(t, bc);
        loop {
            for r in t + 1..rows {
                if d[(r, t)].is_zero() {
                    continue;
                }
                let [x, y, u2, v2] = elimination(&d[(t, t)], &d[(r, t)]);
                combine_rows(&mut d, t, r, [&x, &y, &u2, &v2]);
                combine_rows(&mut left, t, r, [&x, &y, &u2, &v2]);
            }
            for c in t + 1..cols {
                if d[(t, c)].is_zero() {
                    continue;
                }
                let [x, y, u2, v2] = elimination(&d[(t, t)], &d[(t, c)]);
                combine_cols(&mut d, t, c, [&x, &y, &u2, &v2]);
                combine_cols(&mut right, t, c, [&x, &y, &u2, &v2]);
            }
            if (t + 1..rows).any(|r| !d[(r, t)].is_zero()) {
                continue;
            }
            let pivot = d[(t, t)].clone();
            let offender = (t + 1..rows).find(|&r| {
                (t + 1..cols).any(|c| !d[(r, c)].is_multiple_of(&pivot))
            });
            match offender {
                Some(r) => {
                    let one = BigInt::one();
                    add_row_multiple(&mut d, t, r, &one);
                    add_row_multiple(&mut left, t, r, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut left, t);
        }
        t += 1;
    }
    Smith {
        diagonal: d,
        left,
        right,
        rank: t,
    }
}

/// Integer basis of `{x : m·x = 0}`, saturated, in Hermite-reduced form.
pub fn kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let h = hermite(&m.transpose());
    let basis: Vec<Vec<BigInt>> = (h.rank..m.cols())
        .map(|r| h.transform.row(r).to_vec())
        .collect();
    reduce_basis(&basis, m.cols())
}

/// Hermite-reduce a list of independent row vectors of length `n`.
pub fn reduce_basis(vectors: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let h = hermite(&IntMatrix::from_rows(vectors));
    debug_assert!(h.hnf.cols() == n);
    (0..h.rank).map(|r| h.hnf.row(r).to_vec()).collect()
}

/// Some integer solution of `m·x = b`, if one exists.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.rows(), b.len(), "dimension mismatch");
    let s = smith(m);
    let z = s.left.mul_vec(b);
    let mut y = alloc::vec![BigInt::zero(); m.cols()];
    for (i, zi) in z.iter().enumerate() {
        if i < s.rank {
            let di = &s.diagonal[(i, i)];
            if !zi.is_multiple_of(di) {
                return None;
            }
            y[i] = zi / di;
        } else if !zi.is_zero() {
            return None;
        }
    }
    Some(s.right.mul_vec(&y))
}

/// True when the rows of `vectors` generate all of `Zⁿ`.
pub fn spans_full_lattice(vectors: &[Vec<BigInt>], n: usize) -> bool {
    if n == 0 {
        return true;
    }
    if vectors.len() < n {
        return false;
    }
    let h = hermite(&IntMatrix::from_rows(vectors));
    h.rank == n && (0..n).all(|i| h.hnf[(i, i)].is_one())
}

/// Canonical Hermite basis of the span of the given rows (any rank).
pub fn span_basis(vectors: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let h = hermite(&IntMatrix::from_rows(vectors));
    let _ = n;
    (0..h.rank).map(|r| h.hnf.row(r).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ints;

    fn check_hermite(m: &IntMatrix) {
        let h = hermite(m);
        assert_eq!(&h.transform * m, h.hnf);
        assert!(h.transform.determinant().abs().is_one());
        for (r, &pc) in h.pivots.iter().enumerate() {
            assert!(h.hnf[(r, pc)].is_positive());
            for above in 0..r {
                let e = &h.hnf[(above, pc)];
                assert!(!e.is_negative() && e < &h.hnf[(r, pc)]);
            }
        }
    }

    fn check_smith(m: &IntMatrix) {
        let s = smith(m);
        assert_eq!(&(&s.left * m) * &s.right, s.diagonal);
        assert!(s.left.determinant().abs().is_one());
        assert!(s.right.determinant().abs().is_one());
        let divs = s.elementary_divisors();
        for w in divs.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if r != c || r >= s.rank {
                    assert!(s.diagonal[(r, c)].is_zero());
                }
            }
        }
    }

    #[test]
    fn hermite_identity_is_identity() {
        let id = IntMatrix::identity(4);
        assert_eq!(hermite(&id).hnf, id);
    }

    #[test]
    fn smith_of_minus_two() {
        let s = smith(&IntMatrix::from_i64(&[&[-2]]));
        assert_eq!(s.elementary_divisors(), ints(&[2]));
    }

    #[test]
    fn normal_forms_on_samples() {
        let samples = [
            IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]),
            IntMatrix::from_i64(&[&[0, 0], &[0, 0]]),
            IntMatrix::from_i64(&[&[2, 0], &[0, 3], &[1, 1]]),
            IntMatrix::from_i64(&[&[6, 4, 2], &[3, 2, 1]]),
            IntMatrix::from_i64(&[&[0, 5], &[7, 0], &[0, 0]]),
        ];
        for m in &samples {
            check_hermite(m);
            check_smith(m);
        }
        let s = smith(&samples[0]);
        assert_eq!(s.elementary_divisors(), ints(&[2, 6, 12]));
    }

    #[test]
    fn kernel_and_solve() {
        let m = IntMatrix::from_i64(&[&[1, 1, 1], &[0, 2, 4]]);
        let k = kernel(&m);
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(Zero::is_zero));
        assert_eq!(k[0], ints(&[1, -2, 1]));
        let x = solve_integer(&m, &ints(&[3, 6])).unwrap();
        assert_eq!(m.mul_vec(&x), ints(&[3, 6]));
        assert!(solve_integer(&m, &ints(&[0, 1])).is_none());
    }

    #[test]
    fn spanning() {
        assert!(spans_full_lattice(&[ints(&[2, 1]), ints(&[1, 1])], 2));
        assert!(!spans_full_lattice(&[ints(&[2, 0]), ints(&[0, 1])], 2));
        assert!(!spans_full_lattice(&[ints(&[1, 0])], 2));
    }
}
