//! Concrete lattices with Δ-sets for complements of a regular fibre.
//!
//! One block per fibre-sum summand (α's meeting β₈ of a −E8), the γ/δ
//! classes of the irregular part, the ζ classes gluing adjacent summands,
//! and three σ classes per multiple fibre. Pairings that are not forced by
//! the construction are set to 0, with one exception: every γ pairs 1 with
//! the long vector of the first summand (through β₁ and β₂), so that the
//! three ε classes differ from the α's.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::rational::summand_gram;
use super::spec::SurfaceSpec;
use crate::error::{Error, Result};
use crate::lattice::{IntVector, Lattice};
use crate::matrix::IntMatrix;
use crate::roots::{DeltaSet, LONG_VECTOR};

#[derive(Debug, Clone)]
pub struct DeltaModel {
    pub spec: SurfaceSpec,
    pub lattice: Lattice,
    pub delta: DeltaSet,
    /// One label per Δ vector.
    pub labels: Vec<String>,
    /// Class of the removed fibre's neighbour `f` (radical), when multiple fibres exist.
    pub fibre: Option<IntVector>,
    /// Basis of a unimodular complement of the radical, when the lattice is semi-definite.
    pub semidefinite_summand: Option<Vec<IntVector>>,
    pub notes: Vec<String>,
}

impl DeltaModel {
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Three (−2)-classes attached to a multiple fibre of multiplicity `m`.
#[derive(Debug, Clone)]
pub struct SigmaTriple {
    pub lattice: Lattice,
    pub sigma: [IntVector; 3],
    /// `f / m`, the class of the reduced multiple fibre.
    pub f_m: IntVector,
    pub f: IntVector,
}

struct Layout {
    rank: usize,
    /// (first index, α count) per summand; β's follow the α's.
    summands: Vec<(usize, usize)>,
    gammas: Vec<usize>,
    deltas: Vec<usize>,
    zetas: Vec<(usize, usize, usize)>,
}

fn alpha_counts(spec: &SurfaceSpec) -> Vec<usize> {
    let d = spec.d() as usize;
    let first = if spec.q() == 0 { 3 } else { 7 };
    let mut counts = vec![first];
    counts.extend(core::iter::repeat_n(5, d - 1));
    if !spec.multiplicities().is_empty() {
        *counts.last_mut().expect("d ≥ 1") += 2;
    }
    counts
}

fn layout(spec: &SurfaceSpec) -> Layout {
    let mut next = 0;
    let mut summands = Vec::new();
    for a in alpha_counts(spec) {
        summands.push((next, a));
        next += a + 8;
    }
    let classes = if spec.q() >= 1 { 2 * spec.q() as usize - 1 } else { 0 };
    let gammas: Vec<usize> = (next..next + classes).collect();
    next += classes;
    let deltas: Vec<usize> = (next..next + classes).collect();
    next += classes;
    let mut zetas = Vec::new();
    for s in 1..summands.len() {
        for j in 0..2 {
            zetas.push((next, s, j));
            next += 1;
        }
    }
    Layout {
        rank: next,
        summands,
        gammas,
        deltas,
        zetas,
    }
}

fn set_pair(g: &mut IntMatrix, i: usize, j: usize, v: i64) {
    g[(i, j)] = BigInt::from(v);
    g[(j, i)] = BigInt::from(v);
}

/// Builds the model lattice and Δ-set for `H₂(X − f)` of the given surface.
pub fn build_delta_model(spec: &SurfaceSpec) -> Result<DeltaModel> {
    let lay = layout(spec);
    let n = lay.rank;
    let mut g = IntMatrix::zeros(n, n);
    for &(start, a) in &lay.summands {
        let block = summand_gram(a);
        for r in 0..a + 8 {
            for c in 0..a + 8 {
                g[(start + r, start + c)] = block[(r, c)].clone();
            }
        }
    }
    let (s0, a0) = lay.summands[0];
    let beta = |s: usize, j: usize| lay.summands[s].0 + lay.summands[s].1 + j;
    for &gi in &lay.gammas {
        g[(gi, gi)] = BigInt::from(-2);
        for i in 0..a0 {
            set_pair(&mut g, gi, s0 + i, if i == 0 { 0 } else { -1 });
        }
        set_pair(&mut g, gi, beta(0, 0), 1);
        set_pair(&mut g, gi, beta(0, 1), -1);
    }
    for &di in &lay.deltas {
        g[(di, di)] = BigInt::from(-2);
        set_pair(&mut g, di, s0 + 1, 1);
    }
    for &(zi, s, j) in &lay.zetas {
        g[(zi, zi)] = BigInt::from(-2);
        set_pair(&mut g, zi, lay.summands[s].0 + j, 1);
        set_pair(&mut g, zi, lay.summands[s - 1].0 + j, 1);
    }

    let unit = |i: usize| {
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::from(1);
        v
    };
    let long = |s: usize| {
        let mut v = vec![BigInt::zero(); n];
        for (j, &c) in LONG_VECTOR.iter().enumerate() {
            v[beta(s, j)] = BigInt::from(c);
        }
        v
    };
    let add = |x: &IntVector, y: &IntVector, k: i64| -> IntVector {
        x.iter().zip(y).map(|(a, b)| a + BigInt::from(k) * b).collect()
    };

    // multiple fibres: the last α of the last summand becomes φ = f/m
    let last = lay.summands.len() - 1;
    let (sl, al) = lay.summands[last];
    let phi_index = (!spec.multiplicities().is_empty()).then_some(sl + al - 1);
    if let Some(p) = phi_index {
        for c in 0..n {
            g[(p, c)] = BigInt::zero();
            g[(c, p)] = BigInt::zero();
        }
    }
    let lattice = Lattice::from_int(&g)?.with_label(format!("H2(X-f) model {spec}"));

    let mut vectors: Vec<IntVector> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    for (s, &(start, a)) in lay.summands.iter().enumerate() {
        for i in 0..a {
            if Some(start + i) == phi_index {
                continue;
            }
            vectors.push(unit(start + i));
            labels.push(format!("alpha{}_{}", s + 1, i + 1));
        }
        for j in 0..8 {
            vectors.push(unit(beta(s, j)));
            labels.push(format!("beta{}_{}", s + 1, j + 1));
        }
    }
    for (k, &gi) in lay.gammas.iter().enumerate() {
        vectors.push(unit(gi));
        labels.push(format!("gamma{}", k + 1));
    }
    for (k, &di) in lay.deltas.iter().enumerate() {
        vectors.push(unit(di));
        labels.push(format!("delta{}", k + 1));
    }
    for &(zi, s, j) in &lay.zetas {
        vectors.push(unit(zi));
        labels.push(format!("zeta{}_{}", s + 1, j + 1));
    }
    if spec.q() >= 1 {
        let l0 = long(0);
        let gamma = unit(lay.gammas[0]);
        let delta = unit(lay.deltas[0]);
        let c = lattice.pair_int(&gamma, &l0)?;
        let d = lattice.pair_int(&delta, &l0)?;
        let rho = |i: usize| add(&l0, &unit(s0 + i), 1);
        let shift: IntVector = rho(0)
            .iter()
            .zip(rho(1))
            .map(|(x, y)| &c * x + &d * y)
            .collect();
        for i in 0..3 {
            vectors.push(add(&shift, &unit(s0 + i), 1));
            labels.push(format!("epsilon{}", i + 1));
        }
    }
    let mut fibre = None;
    let mut notes = vec![String::from("pairings not forced by the construction are 0")];
    if let Some(p) = phi_index {
        let m = spec.lcm();
        let phi = unit(p);
        let f: IntVector = phi.iter().map(|x| x * BigInt::from(m)).collect();
        vectors.push(add(&f, &long(last), -1));
        labels.push(format!("alpha{}_{}", last + 1, al));
        for (i, &mi) in spec.multiplicities().iter().enumerate() {
            let i1 = i as i64 + 1;
            let f_i: IntVector = phi.iter().map(|x| x * BigInt::from(m / i64::from(mi))).collect();
            let s2 = add(&unit(beta(last, 3)), &f, 2 * i1);
            let s1 = add(&s2, &f_i, 1);
            let s3 = add(&unit(beta(last, 0)), &f, i1);
            for (t, v) in [s1, s2, s3].into_iter().enumerate() {
                vectors.push(v);
                labels.push(format!("sigma{}_{}", i1, t + 1));
            }
        }
        notes.push(String::from("σ₁·σ₃ = σ₂·σ₃ = +1 (sign fixed)"));
        fibre = Some(f);
    }
    let semidefinite_summand = (spec.d() == 1 && spec.q() == 0)
        .then(|| (0..8).map(|j| unit(beta(0, j))).collect());
    let delta = DeltaSet::new(lattice.clone(), vectors)?;
    Ok(DeltaModel {
        spec: spec.clone(),
        lattice,
        delta,
        labels,
        fibre,
        semidefinite_summand,
        notes,
    })
}

/// σ-triple for a single multiple fibre of multiplicity `m` in the rational model.
pub fn build_sigma_triple(m: i64) -> Result<SigmaTriple> {
    if m < 2 {
        return Err(Error::InvalidMultiplicity(m));
    }
    let spec = SurfaceSpec::new(1, 0, &[m])?;
    let model = build_delta_model(&spec)?;
    let pick = |label: &str| model.delta.vectors()[model.index_of(label).expect("σ present")].clone();
    let sigma = [pick("sigma1_1"), pick("sigma1_2"), pick("sigma1_3")];
    let f_m: IntVector = sigma[0].iter().zip(&sigma[1]).map(|(a, b)| a - b).collect();
    let f = model.fibre.clone().expect("multiple fibre present");
    Ok(SigmaTriple {
        lattice: model.lattice,
        sigma,
        f_m,
        f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::gcd_of;

    #[test]
    fn irregular_count() {
        let m = build_delta_model(&SurfaceSpec::new(1, 1, &[]).unwrap()).unwrap();
        assert_eq!(m.delta.len(), 20);
        assert_eq!(m.lattice.rank(), 17);
    }

    #[test]
    fn rational_base_case() {
        let m = build_delta_model(&SurfaceSpec::new(1, 0, &[]).unwrap()).unwrap();
        let r = super::super::rational::build_x1_minus_nf(1);
        assert_eq!(m.lattice.int_gram().unwrap(), r.lattice.int_gram().unwrap());
        assert_eq!(m.delta.vectors(), r.delta.vectors());
    }

    #[test]
    fn zeta_meets_adjacent_summands() {
        let m = build_delta_model(&SurfaceSpec::new(2, 1, &[]).unwrap()).unwrap();
        let p = m.delta.pairings().unwrap();
        let z = m.index_of("zeta2_1").unwrap();
        let ones: Vec<&str> = (0..m.delta.len())
            .filter(|&i| p[z][i] == BigInt::from(1))
            .map(|i| m.labels[i].as_str())
            .collect();
        assert!(ones.contains(&"alpha1_1") && ones.contains(&"alpha2_1"));
    }

    #[test]
    fn sigma_triple() {
        for m in 2..6 {
            let t = build_sigma_triple(m).unwrap();
            let l = &t.lattice;
            for s in &t.sigma {
                assert_eq!(l.norm(s).unwrap(), BigInt::from(-2));
            }
            assert_eq!(l.pair_int(&t.sigma[0], &t.sigma[2]).unwrap(), BigInt::from(1));
            assert_eq!(l.pair_int(&t.sigma[1], &t.sigma[2]).unwrap(), BigInt::from(1));
            assert_eq!(l.pair_int(&t.sigma[0], &t.sigma[1]).unwrap(), BigInt::from(-2));
            assert!(l.norm(&t.f_m).unwrap().is_zero());
            assert_eq!(gcd_of(&t.f), BigInt::from(m));
            let mf: IntVector = t.f_m.iter().map(|x| x * BigInt::from(m)).collect();
            assert_eq!(mf, t.f);
        }
        assert_eq!(build_sigma_triple(1).unwrap_err(), Error::InvalidMultiplicity(1));
    }
}
