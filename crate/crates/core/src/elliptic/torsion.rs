use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::lattice::FiniteAbelianGroup;
use crate::matrix::IntMatrix;

/// `m = lcm(mᵢ)` and `(⊕ ℤ_{mᵢ}) / ⟨(1, …, 1)⟩`.
pub fn torsion_of_complement(multiplicities: &[u32]) -> (BigInt, FiniteAbelianGroup) {
    let m = multiplicities
        .iter()
        .fold(BigInt::one(), |acc, &x| acc.lcm(&BigInt::from(x)));
    let k = multiplicities.len();
    if k == 0 {
        return (m, FiniteAbelianGroup::trivial());
    }
    let relations = IntMatrix::from_fn(k + 1, k, |r, c| {
        if r == k {
            BigInt::one()
        } else if r == c {
            BigInt::from(multiplicities[r])
        } else {
            BigInt::from(0)
        }
    });
    let group = FiniteAbelianGroup::from_relations(&relations).expect("finite quotient");
    (m, group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ints;

    #[test]
    fn small_cases() {
        let (m, t) = torsion_of_complement(&[]);
        assert!(m.is_one() && t.is_trivial());
        let (m, t) = torsion_of_complement(&[2, 3]);
        assert_eq!(m, BigInt::from(6));
        assert!(t.is_trivial());
        let (_, t) = torsion_of_complement(&[2, 2]);
        assert_eq!(t.invariant_factors(), &ints(&[2])[..]);
        let (_, t) = torsion_of_complement(&[3, 3, 3]);
        assert_eq!(t.invariant_factors(), &ints(&[3, 3])[..]);
    }
}
