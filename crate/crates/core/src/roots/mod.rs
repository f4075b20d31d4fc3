//! Reflection groups generated by (−2)-vectors.

mod constants;
mod descent;
mod ebeling;
mod enumerate;

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{dot, IntVector, Lattice};
use crate::matrix::sup_norm;

pub use constants::{
    diagram_lambda, dynkin_e10, dynkin_e8, long_vector, negative_e10, negative_e8,
    DIAGRAM_LAMBDA, E10_EXTRA_EDGES, E8_EDGES, LONG_VECTOR,
};
pub use descent::word_in_root_reflections;
pub use ebeling::{check_ebeling, check_semidefinite_lemma, EbelingReport, SemidefiniteReport};
pub use enumerate::enumerate_vectors_of_square;
pub use crate::lattice::{factor_into_reflections, ReflectionWord};

/// A set of distinct vectors of square −2 in a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSet {
    lattice: Lattice,
    vectors: Vec<IntVector>,
}

impl DeltaSet {
    pub fn new(lattice: Lattice, vectors: Vec<IntVector>) -> Result<Self> {
        let minus_two = BigInt::from(-2);
        let mut seen = BTreeSet::new();
        for (i, v) in vectors.iter().enumerate() {
            let sq = lattice.norm(v)?;
            if sq != minus_two {
                return Err(Error::NotARoot { index: i, square: format!("{sq}") });
            }
            if !seen.insert(v.clone()) {
                return Err(Error::DuplicateVector { index: i });
            }
        }
        Ok(DeltaSet { lattice, vectors })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn vectors(&self) -> &[IntVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Pairing matrix of the vectors.
    pub fn pairings(&self) -> Result<Vec<Vec<BigInt>>> {
        let g = self.lattice.int_gram()?;
        let images: Vec<IntVector> = self.vectors.iter().map(|v| g.mul_vec(v)).collect();
        Ok(self
            .vectors
            .iter()
            .map(|x| images.iter().map(|gy| dot(x, gy)).collect())
            .collect())
    }
}

/// Closure of `seeds` under the reflections in `delta`, sorted.
///
/// With a bound, vectors leaving the box `|vᵢ| ≤ bound` are dropped. An
/// unbounded closure is only allowed on definite lattices, where orbits are
/// finite.
pub fn orbit_closure(
    delta: &DeltaSet,
    seeds: &[IntVector],
    bound: Option<&BigInt>,
) -> Result<Vec<IntVector>> {
    let lattice = delta.lattice();
    let g = lattice.int_gram()?;
    if bound.is_none() && !lattice.is_definite()? {
        return Err(Error::BoundRequired);
    }
    let reflectors: Vec<(IntVector, IntVector)> = delta
        .vectors()
        .iter()
        .map(|d| (d.clone(), g.mul_vec(d)))
        .collect();
    let within = |v: &IntVector| bound.is_none_or(|b| &sup_norm(v) <= b);
    let mut seen: BTreeSet<IntVector> = BTreeSet::new();
    let mut queue: VecDeque<IntVector> = VecDeque::new();
    let mut sorted_seeds = seeds.to_vec();
    sorted_seeds.sort();
    for s in sorted_seeds {
        if s.len() != lattice.rank() {
            return Err(Error::DimensionMismatch { expected: lattice.rank(), found: s.len() });
        }
        if within(&s) && seen.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for (d, gd) in &reflectors {
            let p = dot(&x, gd);
            if p.is_zero() {
                continue;
            }
            let y: IntVector = x.iter().zip(d).map(|(a, b)| a + &p * b).collect();
            if within(&y) && !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Whether the graph with edges `|⟨x,y⟩| = 1` on `delta` is connected.
pub fn unit_edge_connected(delta: &DeltaSet) -> Result<bool> {
    if delta.is_empty() {
        return Err(Error::EmptySet);
    }
    let p = delta.pairings()?;
    let n = delta.len();
    let mut visited = vec![false; n];
    let mut stack = vec![0];
    visited[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !visited[j] && p[i][j].abs().is_one() {
                visited[j] = true;
                stack.push(j);
            }
        }
    }
    Ok(visited.into_iter().all(|v| v))
}

/// First 6-tuple of distinct indices whose pairings equal [`DIAGRAM_LAMBDA`]
/// entry by entry, searching in lexicographic index order.
pub fn find_lambda_diagram(delta: &DeltaSet) -> Result<Option<[usize; 6]>> {
    let p = delta.pairings()?;
    let small: Vec<Vec<Option<i64>>> = p
        .iter()
        .map(|r| r.iter().map(ToPrimitive::to_i64).collect())
        .collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(6);
    let found = lambda_search(&small, &mut chosen);
    if let Some(w) = found {
        // re-verify every entry, including zeros
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(p[w[a]][w[b]], BigInt::from(DIAGRAM_LAMBDA[a][b]));
            }
        }
    }
    Ok(found)
}

fn lambda_search(p: &[Vec<Option<i64>>], chosen: &mut Vec<usize>) -> Option<[usize; 6]> {
    let k = chosen.len();
    if k == 6 {
        let mut out = [0; 6];
        out.copy_from_slice(chosen);
        return Some(out);
    }
    for cand in 0..p.len() {
        if chosen.contains(&cand) {
            continue;
        }
        let fits = chosen
            .iter()
            .enumerate()
            .all(|(a, &i)| p[i][cand] == Some(DIAGRAM_LAMBDA[a][k]));
        if !fits {
            continue;
        }
        chosen.push(cand);
        if let Some(w) = lambda_search(p, chosen) {
            return Some(w);
        }
        chosen.pop();
    }
    None
}

/// Whether `vectors` generate the whole lattice `ℤⁿ`.
pub fn spans_lattice(lattice: &Lattice, vectors: &[IntVector]) -> bool {
    crate::lattice::normal_form::spans_full_lattice(vectors, lattice.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::unit_vector;
    use crate::matrix::ints;

    fn simple_roots() -> DeltaSet {
        DeltaSet::new(negative_e8(), (0..8).map(|i| unit_vector(8, i)).collect()).unwrap()
    }

    #[test]
    fn delta_validation() {
        let e8 = negative_e8();
        assert!(matches!(
            DeltaSet::new(e8.clone(), vec![ints(&[1, 1, 0, 0, 0, 0, 0, 0])]),
            Err(Error::NotARoot { index: 0, .. })
        ));
        assert_eq!(
            DeltaSet::new(e8, vec![unit_vector(8, 0), unit_vector(8, 0)]),
            Err(Error::DuplicateVector { index: 1 })
        );
    }

    #[test]
    fn orbit_of_simple_root_is_all_roots() {
        let d = simple_roots();
        let orbit = orbit_closure(&d, &[unit_vector(8, 0)], None).unwrap();
        let roots = enumerate_vectors_of_square(d.lattice(), &BigInt::from(-2), None).unwrap();
        assert_eq!(orbit, roots);
    }

    #[test]
    fn trivial_orbits() {
        let l = Lattice::diagonal(&[-2]);
        let d = DeltaSet::new(l.clone(), vec![ints(&[1])]).unwrap();
        assert_eq!(orbit_closure(&d, &[ints(&[1])], None).unwrap(), vec![ints(&[-1]), ints(&[1])]);
        let empty = DeltaSet::new(l, vec![]).unwrap();
        assert_eq!(orbit_closure(&empty, &[ints(&[1])], None).unwrap(), vec![ints(&[1])]);
        assert_eq!(unit_edge_connected(&empty), Err(Error::EmptySet));
    }

    #[test]
    fn connectivity() {
        assert!(unit_edge_connected(&simple_roots()).unwrap());
        let l = Lattice::diagonal(&[-2, -2]);
        let d = DeltaSet::new(l, vec![ints(&[1, 0]), ints(&[0, 1])]).unwrap();
        assert!(!unit_edge_connected(&d).unwrap());
    }

    #[test]
    fn lambda_planted_and_absent() {
        assert_eq!(find_lambda_diagram(&simple_roots()).unwrap(), None);
        // planted: the λ-pattern itself as the first 6 basis vectors plus junk
        let mut g = crate::matrix::IntMatrix::zeros(8, 8);
        let lam = diagram_lambda();
        for i in 0..6 {
            for j in 0..6 {
                g[(i, j)] = lam[(i, j)].clone();
            }
        }
        g[(6, 6)] = BigInt::from(-2);
        g[(7, 7)] = BigInt::from(-2);
        g[(6, 7)] = BigInt::from(1);
        g[(7, 6)] = BigInt::from(1);
        let l = Lattice::from_int(&g).unwrap();
        let d = DeltaSet::new(l, (0..8).map(|i| unit_vector(8, i)).collect()).unwrap();
        assert_eq!(find_lambda_diagram(&d).unwrap(), Some([0, 1, 2, 3, 4, 5]));
    }
}
