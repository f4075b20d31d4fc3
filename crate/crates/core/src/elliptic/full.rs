//! Unimodular models of `H̄₂(X)` with the canonical class.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::spec::{Parity, SurfaceSpec};
use crate::error::{Error, Result};
use crate::lattice::{IntVector, Lattice};
use crate::roots::negative_e8;

/// Largest coordinate tried by the characteristic isotropic search.
pub const ODD_SEARCH_BOUND: u32 = 9;

#[derive(Debug, Clone)]
pub struct FullLattice {
    pub lattice: Lattice,
    /// Canonical class `k = κ·p`.
    pub k: IntVector,
    /// Primitive isotropic class with `k = κ·p`.
    pub p: IntVector,
    pub kappa: i64,
}

/// Even case: `b⁺·U ⊕ d·(−E8)` with `p` the first isotropic basis vector.
/// Odd case: `b⁺⟨1⟩ ⊕ b⁻⟨−1⟩` with `p` a primitive isotropic vector whose
/// coordinates are all odd.
pub fn build_full_h2bar(spec: &SurfaceSpec) -> Result<FullLattice> {
    let inv = spec.invariants();
    let b_plus = inv.b_plus as usize;
    let b_minus = inv.b_minus as usize;
    let (lattice, p) = match inv.parity {
        Parity::Even => {
            let u = Lattice::hyperbolic_plane();
            let e8 = negative_e8();
            let mut parts: Vec<&Lattice> = vec![&u; b_plus];
            parts.extend(core::iter::repeat_n(&e8, spec.d() as usize));
            let l = Lattice::direct_sum(&parts).with_label(format!("{b_plus}U + {}(-E8)", spec.d()));
            let mut p = vec![BigInt::zero(); l.rank()];
            p[0] = BigInt::from(1);
            (l, p)
        }
        Parity::Odd => {
            let mut diag = vec![1i64; b_plus];
            diag.extend(core::iter::repeat_n(-1, b_minus));
            let l = Lattice::diagonal(&diag).with_label(format!("{b_plus}<1> + {b_minus}<-1>"));
            let p = odd_isotropic_search(b_plus, b_minus, ODD_SEARCH_BOUND).ok_or_else(|| {
                Error::SearchFailed {
                    bound: ODD_SEARCH_BOUND,
                    what: String::from("primitive isotropic vector with odd coordinates"),
                }
            })?;
            (l, p)
        }
    };
    let k = p.iter().map(|x| x * BigInt::from(inv.kappa)).collect();
    Ok(FullLattice {
        lattice,
        k,
        p,
        kappa: inv.kappa,
    })
}

/// Odd coordinate multisets are described by counts of the values 1, 3, …, bound.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for rest in compositions(total - first, parts - 1) {
            let mut v = vec![first];
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

fn square_sum(counts: &[usize], values: &[i64]) -> i64 {
    counts.iter().zip(values).map(|(&c, &v)| c as i64 * v * v).sum()
}

/// Deterministic search for `x` with odd entries `≤ bound` in absolute
/// value, `Σ x⁺ᵢ² = Σ x⁻ⱼ²`. Positive blocks are tried by increasing square
/// sum; the negative block prefers the most 1's.
fn odd_isotropic_search(b_plus: usize, b_minus: usize, bound: u32) -> Option<IntVector> {
    if b_plus == 0 || b_minus == 0 {
        return None;
    }
    let values: Vec<i64> = (1..=i64::from(bound)).filter(|v| v % 2 == 1).collect();
    let parts = values.len();
    let mut negative: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for c in compositions(b_minus, parts) {
        negative.entry(square_sum(&c, &values)).or_insert(c);
    }
    let mut positive: Vec<(i64, Vec<usize>)> = compositions(b_plus, parts)
        .into_iter()
        .map(|c| (square_sum(&c, &values), c))
        .collect();
    positive.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
    for (s, pc) in positive {
        if let Some(nc) = negative.get(&s) {
            let expand = |counts: &[usize]| -> Vec<BigInt> {
                let mut out = Vec::new();
                for (c, v) in counts.iter().zip(&values).rev() {
                    out.extend(core::iter::repeat_n(BigInt::from(*v), *c));
                }
                out
            };
            let mut x = expand(&pc);
            x.extend(expand(nc));
            return Some(x);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Signature;
    use crate::matrix::ints;

    #[test]
    fn k3_model() {
        let f = build_full_h2bar(&SurfaceSpec::new(2, 0, &[]).unwrap()).unwrap();
        assert_eq!(f.lattice.rank(), 22);
        assert!(f.k.iter().all(Zero::is_zero));
        assert_eq!(f.lattice.signature().unwrap(), Signature::new(3, 19, 0));
        assert!(f.lattice.is_even().unwrap());
    }

    #[test]
    fn rational_model() {
        let f = build_full_h2bar(&SurfaceSpec::new(1, 0, &[]).unwrap()).unwrap();
        assert_eq!(f.p, ints(&[3, 1, 1, 1, 1, 1, 1, 1, 1, 1]));
        let minus_p: IntVector = f.p.iter().map(|x| -x).collect();
        assert_eq!(f.k, minus_p);
        assert!(f.lattice.is_characteristic(&f.k).unwrap());
    }

    #[test]
    fn dolgachev_model() {
        let f = build_full_h2bar(&SurfaceSpec::new(1, 0, &[2, 3]).unwrap()).unwrap();
        assert_eq!(f.k, f.p);
        assert_eq!(f.lattice.divisibility(&f.k).unwrap(), BigInt::from(1));
    }

    #[test]
    fn search_prefers_small_entries() {
        assert_eq!(odd_isotropic_search(3, 19, 9).unwrap()[..3], ints(&[3, 3, 1])[..]);
        assert_eq!(odd_isotropic_search(1, 1, 9).unwrap(), ints(&[1, 1]));
        assert_eq!(odd_isotropic_search(0, 3, 9), None);
    }
}
