//! JSON file formats for lattices, isometries, Δ-sets, surface specs and
//! the reports produced by the core crate.

use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use ellsurf_core::elliptic::{ConstructionReport, SurfaceInvariants, SurfaceSpec};
use ellsurf_core::realize::Verdict;
use ellsurf_core::roots::{negative_e10, negative_e8, DeltaSet, EbelingReport, SemidefiniteReport};
use ellsurf_core::{FiniteAbelianGroup, IntMatrix, IntVector, Isometry, Lattice, Scalar, Signature};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeJson {
    pub rank: usize,
    pub gram: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IsometryJson {
    pub matrix: Vec<Vec<Value>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeltaSetJson {
    pub lattice: LatticeJson,
    pub vectors: Vec<Vec<Value>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceSpecJson {
    pub d: i64,
    pub q: i64,
    #[serde(default)]
    pub multiplicities: Vec<i64>,
}

/// Integers are plain JSON numbers when they fit in 64 bits, decimal strings otherwise.
pub fn int_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                bail!("expected an integer, found {n}")
            }
        }
        Value::String(s) => BigInt::from_str(s.trim()).map_err(|_| anyhow!("expected an integer, found {s:?}")),
        other => bail!("expected an integer, found {other}"),
    }
}

pub fn vector_to_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_to_json).collect())
}

pub fn vectors_to_json(vs: &[IntVector]) -> Value {
    Value::Array(vs.iter().map(|v| vector_to_json(v)).collect())
}

pub fn vector_from_json(v: &Value) -> Result<IntVector> {
    match v {
        Value::Array(xs) => xs.iter().map(int_from_json).collect(),
        other => bail!("expected an integer array, found {other}"),
    }
}

pub fn vectors_from_json(v: &Value) -> Result<Vec<IntVector>> {
    match v {
        Value::Array(rows) => rows.iter().map(vector_from_json).collect(),
        other => bail!("expected an array of integer arrays, found {other}"),
    }
}

fn rows_from_json(rows: &[Vec<Value>]) -> Result<Vec<IntVector>> {
    rows.iter()
        .map(|r| r.iter().map(int_from_json).collect())
        .collect()
}

pub fn matrix_to_json(m: &IntMatrix) -> Vec<Vec<Value>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(int_to_json).collect())
        .collect()
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s.as_integer() {
        Some(n) => int_to_json(&n),
        None => Value::String(s.to_string()),
    }
}

fn scalar_from_json(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => Scalar::from_str(s).map_err(|e| anyhow!("{e}")),
        other => Ok(Scalar::from(int_from_json(other)?)),
    }
}

impl LatticeJson {
    pub fn from_lattice(l: &Lattice) -> Self {
        LatticeJson {
            rank: l.rank(),
            gram: l.gram().iter().map(|r| r.iter().map(scalar_to_json).collect()).collect(),
            label: l.label().map(String::from),
        }
    }

    pub fn to_lattice(&self) -> Result<Lattice> {
        if self.gram.len() != self.rank || self.gram.iter().any(|r| r.len() != self.rank) {
            bail!("gram matrix is not {0} x {0}", self.rank);
        }
        let gram = self
            .gram
            .iter()
            .map(|r| r.iter().map(scalar_from_json).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let l = Lattice::new(gram)?;
        Ok(match &self.label {
            Some(label) => l.with_label(label.clone()),
            None => l,
        })
    }
}

impl IsometryJson {
    pub fn from_isometry(g: &Isometry) -> Self {
        IsometryJson { matrix: matrix_to_json(g.matrix()) }
    }

    pub fn to_isometry(&self, lattice: &Lattice) -> Result<Isometry> {
        let rows = rows_from_json(&self.matrix)?;
        if rows.len() != lattice.rank() || rows.iter().any(|r| r.len() != lattice.rank()) {
            bail!(ellsurf_core::Error::DimensionMismatch { expected: lattice.rank(), found: rows.len() });
        }
        Ok(Isometry::new(lattice, IntMatrix::from_rows(&rows))?)
    }
}

impl DeltaSetJson {
    pub fn from_delta(d: &DeltaSet) -> Self {
        DeltaSetJson {
            lattice: LatticeJson::from_lattice(d.lattice()),
            vectors: d.vectors().iter().map(|v| v.iter().map(int_to_json).collect()).collect(),
        }
    }

    pub fn to_delta(&self) -> Result<DeltaSet> {
        let lattice = self.lattice.to_lattice()?;
        let vectors = rows_from_json(&self.vectors)?;
        for v in &vectors {
            if v.len() != lattice.rank() {
                bail!(ellsurf_core::Error::DimensionMismatch { expected: lattice.rank(), found: v.len() });
            }
        }
        Ok(DeltaSet::new(lattice, vectors)?)
    }
}

impl SurfaceSpecJson {
    pub fn to_spec(&self) -> Result<SurfaceSpec> {
        Ok(SurfaceSpec::new(self.d, self.q, &self.multiplicities)?)
    }
}

/// Reads a file, standard input (`-`), or an inline JSON document.
pub fn load_text(arg: &str) -> Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        return Ok(s);
    }
    fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
}

pub fn load_json<T: for<'de> Deserialize<'de>>(arg: &str, what: &str) -> Result<T> {
    let text = load_text(arg)?;
    serde_json::from_str(&text).with_context(|| format!("malformed {what} JSON"))
}

/// Lattice argument: a JSON source, or one of the built-in names `-E8`, `-E10`, `U`.
pub fn load_lattice(arg: &str) -> Result<Lattice> {
    match arg {
        "-E8" => Ok(negative_e8()),
        "-E10" => Ok(negative_e10()),
        "U" => Ok(Lattice::hyperbolic_plane().with_label("U")),
        _ => load_json::<LatticeJson>(arg, "lattice")?.to_lattice(),
    }
}

pub fn load_vector(arg: &str) -> Result<IntVector> {
    let v: Value = load_json(arg, "vector")?;
    vector_from_json(&v)
}

pub fn load_vectors(arg: &str) -> Result<Vec<IntVector>> {
    let v: Value = load_json(arg, "vector list")?;
    vectors_from_json(&v)
}

pub fn load_spec(arg: &str) -> Result<SurfaceSpec> {
    load_json::<SurfaceSpecJson>(arg, "surface spec")?.to_spec()
}

pub fn spec_to_json(spec: &SurfaceSpec) -> Value {
    json!({ "d": spec.d(), "q": spec.q(), "multiplicities": spec.multiplicities() })
}

pub fn signature_to_json(s: &Signature) -> Value {
    json!({ "positive": s.positive, "negative": s.negative, "null": s.null })
}

pub fn group_to_json(g: &FiniteAbelianGroup) -> Value {
    json!({
        "invariant_factors": g.invariant_factors().iter().map(int_to_json).collect::<Vec<_>>(),
        "order": int_to_json(&g.order()),
        "display": g.to_string(),
    })
}

pub fn invariants_to_json(spec: &SurfaceSpec, inv: &SurfaceInvariants) -> Value {
    json!({
        "spec": spec_to_json(spec),
        "e": inv.e,
        "b1": inv.b1,
        "b2": inv.b2,
        "b_plus": inv.b_plus,
        "b_minus": inv.b_minus,
        "p_g": inv.p_g,
        "m": inv.m,
        "kappa": inv.kappa,
        "parity": inv.parity.as_str(),
        "case_tag": inv.case_tag.as_str(),
    })
}

pub fn verdict_to_json(v: &Verdict) -> Value {
    json!({
        "tag": v.tag.as_str(),
        "certificate": v.certificate,
        "case": v.case.as_str(),
        "spinor_norm": v.spinor_norm,
        "k_action": v.k_action.as_str(),
    })
}

pub fn construction_report_to_json(r: &ConstructionReport) -> Value {
    let claims: Vec<Value> = r
        .claims
        .iter()
        .map(|c| {
            json!({
                "pair": c.pair,
                "expected": scalar_to_json(&c.expected),
                "actual": scalar_to_json(&c.actual),
                "holds": c.holds(),
            })
        })
        .collect();
    let residuals: BTreeMap<&str, String> = r
        .claims
        .iter()
        .map(|c| (c.pair.as_str(), c.residual.to_string()))
        .collect();
    json!({
        "claims": claims,
        "residuals": residuals,
        "constraints_required": r.constraints_required,
        "free_parameters": r.free_parameters,
        "notes": r.notes,
        "all_hold": r.all_hold(),
    })
}

pub fn ebeling_to_json(r: &EbelingReport) -> Value {
    json!({
        "spans": r.spans,
        "orbit_connected": r.orbit_connected,
        "diagram_witness": r.diagram_witness,
        "conclusion_applicable": r.conclusion_applicable,
        "notes": r.notes,
    })
}

pub fn semidefinite_to_json(r: &SemidefiniteReport) -> Value {
    json!({
        "spans": r.spans,
        "summand_roots": r.summand_roots,
        "summand_connected": r.summand_connected,
        "orbit_is_all_roots": r.orbit_is_all_roots,
        "isometries_factored": r.isometries_factored,
        "isometries_tested": r.isometries_tested,
        "conclusion_applicable": r.conclusion_applicable,
        "notes": r.notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_round_trip_with_polynomials() {
        let text = r#"{"rank": 2, "gram": [[-2, "2*c + d - 1"], ["2*c + d - 1", 0]], "label": "t"}"#;
        let l: LatticeJson = serde_json::from_str(text).unwrap();
        let lattice = l.to_lattice().unwrap();
        assert!(lattice.is_symbolic());
        let back = LatticeJson::from_lattice(&lattice);
        assert_eq!(back.gram[0][1], Value::String("2*c + d - 1".into()));
        assert_eq!(back.gram[0][0], Value::from(-2));
        assert_eq!(back.label.as_deref(), Some("t"));
    }

    #[test]
    fn big_integers_become_strings() {
        let big = BigInt::from(i64::MAX) * 4;
        let v = int_to_json(&big);
        assert!(v.is_string());
        assert_eq!(int_from_json(&v).unwrap(), big);
    }

    #[test]
    fn rejects_ragged_gram() {
        let l: LatticeJson = serde_json::from_str(r#"{"rank": 2, "gram": [[1, 0], [0]]}"#).unwrap();
        assert!(l.to_lattice().is_err());
    }

    #[test]
    fn spec_rejects_unknown_fields() {
        assert!(serde_json::from_str::<SurfaceSpecJson>(r#"{"d":1,"q":0,"x":1}"#).is_err());
    }
}
