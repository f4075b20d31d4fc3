//! Which isometries of `(H̄₂, k)` are induced by diffeomorphisms.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::elliptic::{build_full_h2bar, CaseTag, SurfaceSpec};
use crate::error::{Error, Result};
use crate::lattice::normal_form::solve_integer;
use crate::lattice::{positive_orientation_character, spinor_norm};
use crate::lattice::{unit_vector, IntVector, Isometry, Lattice};
use crate::matrix::{gcd_of, IntMatrix};

/// Largest coordinate tried when looking for an isotropic vector.
pub const ISOTROPIC_SEARCH_BOUND: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KAction {
    Fix,
    Negate,
    Other,
}

impl KAction {
    pub fn as_str(self) -> &'static str {
        match self {
            KAction::Fix => "FIX",
            KAction::Negate => "NEGATE",
            KAction::Other => "OTHER",
        }
    }
}

impl fmt::Display for KAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictTag {
    Realized,
    NotRealized,
    /// Depends on the spinor norm of a `k`-reversing diffeomorphism, which was not supplied.
    CosetDependent,
}

impl VerdictTag {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictTag::Realized => "REALIZED",
            VerdictTag::NotRealized => "NOT_REALIZED",
            VerdictTag::CosetDependent => "COSET_DEPENDENT",
        }
    }
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub tag: VerdictTag,
    pub certificate: String,
    pub case: CaseTag,
    pub spinor_norm: i8,
    pub k_action: KAction,
}

/// `FIX` also covers `k = 0`.
pub fn k_action(lattice: &Lattice, k: &[BigInt], g: &Isometry) -> Result<KAction> {
    if k.len() != lattice.rank() || g.dim() != lattice.rank() {
        return Err(Error::DimensionMismatch {
            expected: lattice.rank(),
            found: if k.len() != lattice.rank() { k.len() } else { g.dim() },
        });
    }
    let image = g.apply(k);
    if image.as_slice() == k {
        Ok(KAction::Fix)
    } else if image.iter().zip(k).all(|(a, b)| *a == -b) {
        Ok(KAction::Negate)
    } else {
        Ok(KAction::Other)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StabilizerPredicates {
    pub in_o_k: bool,
    pub in_oprime: bool,
    pub in_oprime_k: bool,
    pub orientation_character: i8,
}

pub fn stabilizer_predicates(lattice: &Lattice, k: &[BigInt], g: &Isometry) -> Result<StabilizerPredicates> {
    let fixes = k_action(lattice, k, g)? == KAction::Fix;
    let theta = spinor_norm(lattice, g)?;
    Ok(StabilizerPredicates {
        in_o_k: fixes,
        in_oprime: theta == 1,
        in_oprime_k: fixes && theta == 1,
        orientation_character: positive_orientation_character(lattice, g)?,
    })
}

fn small_isotropic_vectors(
    lattice: &Lattice,
    orthogonal_to: &[IntVector],
    bound: i64,
) -> Result<impl Iterator<Item = IntVector>> {
    let gram = lattice.int_gram()?.clone();
    let n = lattice.rank();
    let covectors: Vec<IntVector> = orthogonal_to.iter().map(|v| gram.mul_vec(v)).collect();
    let mut candidates: Vec<Vec<(usize, i64)>> = Vec::new();
    for i in 0..n {
        candidates.push(vec![(i, 1)]);
    }
    let values: Vec<i64> = (-bound..=bound).filter(|&v| v != 0).collect();
    for i in 0..n {
        for j in i + 1..n {
            for a in 1..=bound {
                for &b in &values {
                    candidates.push(vec![(i, a), (j, b)]);
                }
            }
        }
    }
    let triples = (0..n).flat_map(move |i| {
        let values = (-bound..=bound).filter(|&v| v != 0).collect::<Vec<_>>();
        (i + 1..n).flat_map(move |j| {
            let values = values.clone();
            (j + 1..n).flat_map(move |l| {
                let values = values.clone();
                (1..=bound).flat_map(move |a| {
                    let values = values.clone();
                    values.clone().into_iter().flat_map(move |b| {
                        values.clone().into_iter().map(move |c| vec![(i, a), (j, b), (l, c)])
                    })
                })
            })
        })
    });
    Ok(candidates.into_iter().chain(triples).filter_map(move |support| {
        let coeffs: Vec<BigInt> = support.iter().map(|&(_, a)| BigInt::from(a)).collect();
        if !gcd_of(&coeffs).is_one() {
            return None;
        }
        let mut square = BigInt::zero();
        for (&(i, _), ca) in support.iter().zip(&coeffs) {
            for (&(j, _), cb) in support.iter().zip(&coeffs) {
                square += ca * cb * &gram[(i, j)];
            }
        }
        if !square.is_zero() {
            return None;
        }
        let orthogonal = covectors
            .iter()
            .all(|cv| support.iter().zip(&coeffs).map(|(&(i, _), c)| c * &cv[i]).sum::<BigInt>().is_zero());
        if !orthogonal {
            return None;
        }
        let mut v = vec![BigInt::zero(); n];
        for (&(i, _), c) in support.iter().zip(coeffs) {
            v[i] = c;
        }
        Some(v)
    }))
}

/// `w` with `⟨w, p⟩ = 1`, preferring `±` a basis vector.
fn dual_partner(lattice: &Lattice, p: &[BigInt]) -> Result<IntVector> {
    let gp = lattice.int_gram()?.mul_vec(p);
    for (i, x) in gp.iter().enumerate() {
        if x.abs().is_one() {
            let mut w = unit_vector(p.len(), i);
            w[i] = x.clone();
            return Ok(w);
        }
    }
    let row = IntMatrix::from_rows(&[gp]);
    solve_integer(&row, &[BigInt::one()])
        .ok_or_else(|| Error::HypothesisViolated(String::from("canonical direction is not primitive in the dual")))
}

/// `−id` on a hyperbolic plane orthogonal to `k`, identity on its complement.
///
/// `p` is the primitive part of `k` (for `k = 0` a small isotropic vector),
/// `w` pairs 1 with `p`, `e` is a small primitive isotropic vector orthogonal
/// to both, and `f′` completes `e` to a unimodular plane orthogonal to `p`
/// and `w`. Needs positive index at least 3.
pub fn build_iota(lattice: &Lattice, k: &[BigInt]) -> Result<Isometry> {
    let n = lattice.rank();
    if k.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: k.len() });
    }
    if !lattice.is_unimodular()? {
        return Err(Error::HypothesisViolated(String::from("lattice is not unimodular")));
    }
    let sig = lattice.signature()?;
    if sig.positive < 3 {
        return Err(Error::HypothesisViolated(format!(
            "positive index {} < 3 (geometric genus zero)",
            sig.positive
        )));
    }
    let bound = i64::from(ISOTROPIC_SEARCH_BOUND);
    let p: IntVector = if k.iter().all(Zero::is_zero) {
        small_isotropic_vectors(lattice, &[], bound)?.next().ok_or(Error::SearchFailed {
            bound: ISOTROPIC_SEARCH_BOUND,
            what: String::from("isotropic vector"),
        })?
    } else {
        let g = gcd_of(k);
        k.iter().map(|x| x / &g).collect()
    };
    if !lattice.norm(&p)?.is_zero() {
        return Err(Error::HypothesisViolated(String::from("canonical class is not isotropic")));
    }
    let w = dual_partner(lattice, &p)?;
    let gram = lattice.int_gram()?.clone();
    let gp = gram.mul_vec(&p);
    let gw = gram.mul_vec(&w);
    for e in small_isotropic_vectors(lattice, &[p.clone(), w.clone()], bound)? {
        let ge = gram.mul_vec(&e);
        let target = [BigInt::one(), BigInt::zero(), BigInt::zero()];
        let system = IntMatrix::from_rows(&[ge, gp.clone(), gw.clone()]);
        let basis_solution = (0..n).map(|i| unit_vector(n, i)).find(|v| system.mul_vec(v) == target);
        let Some(mut f) = basis_solution.or_else(|| solve_integer(&system, &target)) else {
            continue;
        };
        let t = lattice.norm(&f)?;
        let (half, rem) = t.div_rem(&BigInt::from(2));
        if rem.is_zero() {
            for (fi, ei) in f.iter_mut().zip(&e) {
                *fi -= &half * ei;
            }
        }
        let t = lattice.norm(&f)?;
        // x ↦ x − 2·proj(x), proj(x) = ⟨x,f⟩e + ⟨x,e⟩f − t⟨x,e⟩e
        let gf = gram.mul_vec(&f);
        let ge = gram.mul_vec(&e);
        let matrix = IntMatrix::from_fn(n, n, |r, c| {
            let proj = &gf[c] * &e[r] + &ge[c] * &f[r] - &t * &ge[c] * &e[r];
            let id = if r == c { BigInt::one() } else { BigInt::zero() };
            id - proj * 2
        });
        let iota = Isometry::new(lattice, matrix)?;
        let check = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::HypothesisViolated(format!("inversion postcondition failed: {what}")))
            }
        };
        check(iota.apply(k).as_slice() == k, "fixes k")?;
        check(iota.compose(&iota).is_identity(), "involution")?;
        check(positive_orientation_character(lattice, &iota)? == -1, "reverses positive orientation")?;
        check(spinor_norm(lattice, &iota)? == -1, "spinor norm -1")?;
        return Ok(iota);
    }
    Err(Error::SearchFailed {
        bound: ISOTROPIC_SEARCH_BOUND,
        what: String::from("isotropic vector orthogonal to the canonical plane"),
    })
}

/// Classifies `g` acting on the model of `build_full_h2bar(spec)`.
/// `witness_parity` is the spinor norm of a `k`-reversing diffeomorphism.
pub fn decide(spec: &SurfaceSpec, g: &Isometry, witness_parity: Option<i8>) -> Result<Verdict> {
    if let Some(w) = witness_parity {
        if w != 1 && w != -1 {
            return Err(Error::InvalidSpec(format!("witness parity {w} must be +1 or -1")));
        }
    }
    let full = build_full_h2bar(spec)?;
    let lattice = &full.lattice;
    if g.dim() != lattice.rank() {
        return Err(Error::DimensionMismatch { expected: lattice.rank(), found: g.dim() });
    }
    if !g.preserves(lattice)? {
        return Err(Error::NotAnIsometry);
    }
    let inv = spec.invariants();
    let theta = spinor_norm(lattice, g)?;
    let action = k_action(lattice, &full.k, g)?;
    let realized = |b: bool| if b { VerdictTag::Realized } else { VerdictTag::NotRealized };
    let (tag, certificate) = match inv.case_tag {
        CaseTag::Rational => (VerdictTag::Realized, String::from("rational surface: the full isometry group is realized")),
        CaseTag::Enriques => (VerdictTag::Realized, String::from("Enriques surface: the full isometry group is realized")),
        CaseTag::K3 => (
            realized(theta == 1),
            format!("K3 surface: realized iff spinor norm is +1; spinor norm {theta:+}"),
        ),
        CaseTag::Pg0NonRational => (
            realized(action != KAction::Other),
            format!("p_g = 0, kappa > 0: realized iff g(k) = ±k; k-action {action}"),
        ),
        CaseTag::PgPositive => match action {
            KAction::Other => (
                VerdictTag::NotRealized,
                String::from("p_g > 0: g(k) is not ±k, but diffeomorphisms preserve k up to sign"),
            ),
            KAction::Fix => (
                realized(theta == 1),
                format!("p_g > 0, g(k) = k: realized iff spinor norm is +1; spinor norm {theta:+}"),
            ),
            KAction::Negate => match witness_parity {
                Some(w) => (
                    realized(theta == w),
                    format!("p_g > 0, g(k) = -k: realized iff spinor norm equals the witness parity {w:+}; spinor norm {theta:+}"),
                ),
                None => (
                    VerdictTag::CosetDependent,
                    format!(
                        "p_g > 0, g(k) = -k: realized iff spinor norm {theta:+} equals the spinor norm of a k-reversing diffeomorphism (not supplied)"
                    ),
                ),
            },
        },
    };
    Ok(Verdict {
        tag,
        certificate,
        case: inv.case_tag,
        spinor_norm: theta,
        k_action: action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::reflect;
    use crate::matrix::ints;

    #[test]
    fn k_actions() {
        let u = Lattice::hyperbolic_plane();
        let k = ints(&[1, 0]);
        assert_eq!(k_action(&u, &k, &Isometry::identity(2)).unwrap(), KAction::Fix);
        assert_eq!(k_action(&u, &k, &Isometry::negation(2)).unwrap(), KAction::Negate);
        let swap = reflect(&u, &ints(&[1, -1])).unwrap();
        assert_eq!(k_action(&u, &k, &swap).unwrap(), KAction::Other);
        assert_eq!(k_action(&u, &ints(&[0, 0]), &Isometry::negation(2)).unwrap(), KAction::Fix);
    }

    #[test]
    fn iota_on_k3() {
        let spec = SurfaceSpec::new(2, 0, &[]).unwrap();
        let full = build_full_h2bar(&spec).unwrap();
        let iota = build_iota(&full.lattice, &full.k).unwrap();
        // −id on the second U summand
        let m = iota.matrix();
        assert_eq!((m[(2, 2)].clone(), m[(3, 3)].clone()), (BigInt::from(-1), BigInt::from(-1)));
        assert!((4..22).all(|i| m[(i, i)].is_one()));
        let v = decide(&spec, &iota, None).unwrap();
        assert_eq!(v.tag, VerdictTag::NotRealized);
        let s = stabilizer_predicates(&full.lattice, &full.k, &iota).unwrap();
        assert!(s.in_o_k && !s.in_oprime && s.orientation_character == -1);
    }

    #[test]
    fn iota_needs_positive_genus() {
        let full = build_full_h2bar(&SurfaceSpec::new(1, 0, &[2, 3]).unwrap()).unwrap();
        assert!(matches!(build_iota(&full.lattice, &full.k), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn coset_dependent_only_for_negation() {
        let spec = SurfaceSpec::new(3, 0, &[]).unwrap();
        let n = spec.invariants().b2 as usize;
        let v = decide(&spec, &Isometry::negation(n), None).unwrap();
        assert_eq!((v.tag, v.k_action), (VerdictTag::CosetDependent, KAction::Negate));
        let v = decide(&spec, &Isometry::negation(n), Some(v.spinor_norm)).unwrap();
        assert_eq!(v.tag, VerdictTag::Realized);
        assert_eq!(decide(&spec, &Isometry::identity(n), None).unwrap().tag, VerdictTag::Realized);
    }

    #[test]
    fn rejects_foreign_matrices() {
        let spec = SurfaceSpec::new(1, 0, &[]).unwrap();
        assert!(decide(&spec, &Isometry::identity(3), None).is_err());
        let mut m = IntMatrix::identity(10);
        m[(0, 1)] = BigInt::from(1);
        let bogus = Isometry::from_matrix_unchecked(m);
        assert_eq!(decide(&spec, &bogus, None), Err(Error::NotAnIsometry));
    }
}
