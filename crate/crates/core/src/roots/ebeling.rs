//! Hypothesis checkers for generation of isometry groups by root reflections.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{
    enumerate_vectors_of_square, find_lambda_diagram, orbit_closure, unit_edge_connected,
    word_in_root_reflections, DeltaSet,
};
use crate::error::{Error, Result};
use crate::lattice::normal_form::{solve_integer, spans_full_lattice};
use crate::lattice::{reflect, IntVector, Isometry, Lattice};
use crate::matrix::IntMatrix;

/// Outcome of checking the three hypotheses on `(L, Δ)`.
///
/// When `conclusion_applicable` holds, the reflection group of `Δ` equals
/// the group of isometries with real spinor norm one acting trivially on
/// the discriminant group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EbelingReport {
    pub spans: bool,
    pub orbit_connected: bool,
    pub diagram_witness: Option<[usize; 6]>,
    pub conclusion_applicable: bool,
    pub notes: Vec<String>,
}

/// Checks spanning, the single-orbit criterion and the λ-configuration.
pub fn check_ebeling(delta: &DeltaSet) -> Result<EbelingReport> {
    let lattice = delta.lattice();
    if !lattice.is_even()? {
        return Err(Error::OddLattice);
    }
    let mut notes = Vec::new();
    let spans = spans_full_lattice(delta.vectors(), lattice.rank());
    let orbit_connected = if delta.is_empty() {
        false
    } else {
        unit_edge_connected(delta)?
    };
    notes.push(String::from(
        "orbit condition checked by unit-edge connectivity (criterion-based; failure is inconclusive)",
    ));
    let diagram_witness = find_lambda_diagram(delta)?;
    let conclusion_applicable = spans && orbit_connected && diagram_witness.is_some();
    if conclusion_applicable {
        notes.push(String::from(
            "reflection group = {spinor norm +1} ∩ {trivial on discriminant group}",
        ));
    } else {
        if !spans {
            notes.push(String::from("Δ does not generate the lattice"));
        }
        if diagram_witness.is_none() {
            notes.push(String::from("no λ-configuration found among Δ"));
        }
    }
    Ok(EbelingReport {
        spans,
        orbit_connected,
        diagram_witness,
        conclusion_applicable,
        notes,
    })
}

/// Outcome of checking `(L, Δ)` against a splitting `L = rad(L) ⊕ E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidefiniteReport {
    /// (i) Δ generates L.
    pub spans: bool,
    /// Number of Δ-vectors lying in E.
    pub summand_roots: usize,
    /// Δ ∩ E is unit-edge connected.
    pub summand_connected: bool,
    /// Orbit of Δ ∩ E under its reflections is the full root set of E.
    pub orbit_is_all_roots: bool,
    /// (iii) every test isometry of E was written in reflections of Δ ∩ E.
    pub isometries_factored: usize,
    pub isometries_tested: usize,
    pub conclusion_applicable: bool,
    pub notes: Vec<String>,
}

/// Checks the hypotheses of the semi-definite splitting criterion.
///
/// `summand` is a basis of E. The splitting `L = rad(L) ⊕ E` with `E`
/// unimodular is verified first.
pub fn check_semidefinite_lemma(delta: &DeltaSet, summand: &[IntVector]) -> Result<SemidefiniteReport> {
    let lattice = delta.lattice();
    let n = lattice.rank();
    for v in summand {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.len() });
        }
    }
    let radical = lattice.radical()?;
    let mut joint = radical.clone();
    joint.extend(summand.iter().cloned());
    if joint.len() != n || !spans_full_lattice(&joint, n) {
        return Err(Error::DecompositionFailed(format!(
            "radical (rank {}) and summand (rank {}) do not form a basis",
            radical.len(),
            summand.len()
        )));
    }
    let e = lattice.sublattice(summand)?;
    if !e.is_unimodular()? {
        return Err(Error::DecompositionFailed(String::from("summand is not unimodular")));
    }
    let mut notes = Vec::new();
    let spans = spans_full_lattice(delta.vectors(), n);

    // Δ ∩ E in E-coordinates
    let basis_cols = IntMatrix::from_columns(n, summand);
    let in_e: Vec<IntVector> = delta
        .vectors()
        .iter()
        .filter_map(|v| solve_integer(&basis_cols, v))
        .collect();
    let delta_e = DeltaSet::new(e.clone(), in_e)?;
    let summand_connected = !delta_e.is_empty() && unit_edge_connected(&delta_e)?;

    let definite = e.rank() > 0 && e.is_negative_definite()?;
    let orbit_is_all_roots = if definite && !delta_e.is_empty() {
        let roots = enumerate_vectors_of_square(&e, &BigInt::from(-2), None)?;
        let orbit = orbit_closure(&delta_e, delta_e.vectors(), None)?;
        orbit == roots
    } else {
        notes.push(String::from(
            "summand is not negative definite; orbit comparison by enumeration is not available",
        ));
        false
    };

    let mut tested = 0;
    let mut factored = 0;
    if definite {
        for g in test_isometries(&e)? {
            tested += 1;
            match word_in_root_reflections(&e, &g) {
                Ok(w) if w.round_trips(&e, &g)? => factored += 1,
                Ok(_) => notes.push(format!("test isometry {tested} failed to round-trip")),
                Err(Error::NotInGroup { steps }) => {
                    notes.push(format!("test isometry {tested} not reached after {steps} steps"));
                }
                Err(other) => return Err(other),
            }
        }
        if !orbit_is_all_roots {
            notes.push(String::from("Δ ∩ E does not reach every root of E"));
        }
    }
    let all_factored = tested > 0 && factored == tested;
    let conclusion_applicable = spans && summand_connected && orbit_is_all_roots && all_factored;
    if !spans {
        notes.push(String::from("Δ does not generate the lattice"));
    }
    Ok(SemidefiniteReport {
        spans,
        summand_roots: delta_e.len(),
        summand_connected,
        orbit_is_all_roots,
        isometries_factored: factored,
        isometries_tested: tested,
        conclusion_applicable,
        notes,
    })
}

/// `−id` and four deterministic products of six root reflections.
fn test_isometries(e: &Lattice) -> Result<Vec<Isometry>> {
    let roots = enumerate_vectors_of_square(e, &BigInt::from(-2), None)?;
    let mut out = alloc::vec![Isometry::negation(e.rank())];
    if roots.is_empty() {
        return Ok(out);
    }
    for j in 0..4 {
        let mut g = Isometry::identity(e.rank());
        for t in 0..6 {
            let k = 6 * j + t;
            let r = &roots[(k * 7919 + 13) % roots.len()];
            g = g.compose(&reflect(e, r)?);
        }
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::unit_vector;
    use crate::roots::negative_e8;

    #[test]
    fn e8_simple_roots_lack_the_diagram() {
        let d = DeltaSet::new(negative_e8(), (0..8).map(|i| unit_vector(8, i)).collect()).unwrap();
        let r = check_ebeling(&d).unwrap();
        assert!(r.spans && r.orbit_connected);
        assert_eq!(r.diagram_witness, None);
        assert!(!r.conclusion_applicable);
        let single = DeltaSet::new(negative_e8(), alloc::vec![unit_vector(8, 0)]).unwrap();
        assert!(!check_ebeling(&single).unwrap().spans);
    }

    #[test]
    fn odd_lattice_rejected() {
        let d = DeltaSet::new(Lattice::diagonal(&[-1, -2]), alloc::vec![unit_vector(2, 1)]).unwrap();
        assert_eq!(check_ebeling(&d), Err(Error::OddLattice));
    }

    #[test]
    fn hyperbolic_summand_fails_orbit_part() {
        let u = Lattice::hyperbolic_plane();
        let d = DeltaSet::new(u, alloc::vec![crate::matrix::ints(&[1, -1])]).unwrap();
        let r = check_semidefinite_lemma(&d, &[unit_vector(2, 0), unit_vector(2, 1)]).unwrap();
        assert!(!r.spans);
        assert!(!r.orbit_is_all_roots);
        assert!(!r.conclusion_applicable);
    }

    #[test]
    fn e8_summand_passes() {
        let e8 = negative_e8();
        let d = DeltaSet::new(e8, (0..8).map(|i| unit_vector(8, i)).collect()).unwrap();
        let basis: Vec<IntVector> = (0..8).map(|i| unit_vector(8, i)).collect();
        let r = check_semidefinite_lemma(&d, &basis).unwrap();
        assert!(r.spans && r.summand_connected && r.orbit_is_all_roots);
        assert_eq!(r.isometries_factored, r.isometries_tested);
        assert!(r.conclusion_applicable);
    }
}
