use std::process::{Command, Output};

use serde_json::Value;

fn ellsurf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellsurf")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const K3: &str = r#"{"d":2,"q":0,"multiplicities":[]}"#;
const RATIONAL: &str = r#"{"d":1,"q":0,"multiplicities":[]}"#;

fn identity(n: usize) -> String {
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    serde_json::json!({ "matrix": rows }).to_string()
}

#[test]
fn k3_invariants() {
    let out = ellsurf(&["surface", "invariants", "--spec", K3]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["case_tag"], "K3");
    assert_eq!(v["b_plus"], 3);
    assert_eq!(v["b_minus"], 19);
}

#[test]
fn e8_has_240_roots() {
    let out = ellsurf(&["roots", "enumerate", "--square", "-2", "--lattice", "-E8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 240);
    assert_eq!(v["vectors"].as_array().unwrap().len(), 240);
}

#[test]
fn rational_decides_realized() {
    let out = ellsurf(&["decide", "--spec", RATIONAL, "--isometry", &identity(10)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["tag"], "REALIZED");
    assert_eq!(v["case"], "RATIONAL");
    assert_eq!(v["spinor_norm"], 1);
    assert_eq!(v["k_action"], "FIX");
}

#[test]
fn witness_parity_resolves_the_coset() {
    let spec = r#"{"d":3,"q":0,"multiplicities":[]}"#;
    let rows: Vec<Vec<i64>> = (0..34).map(|i| (0..34).map(|j| if i == j { -1 } else { 0 }).collect()).collect();
    let minus = serde_json::json!({ "matrix": rows }).to_string();
    let v = json(&ellsurf(&["decide", "--spec", spec, "--isometry", &minus]));
    assert_eq!(v["tag"], "COSET_DEPENDENT");
    let theta = v["spinor_norm"].as_i64().unwrap().to_string();
    let v = json(&ellsurf(&["decide", "--spec", spec, "--isometry", &minus, "--witness-parity", &theta]));
    assert_eq!(v["tag"], "REALIZED");
}

#[test]
fn lattice_subcommands() {
    let degenerate = r#"{"rank":3,"gram":[[0,0,0],[0,-2,1],[0,1,-2]],"label":"t"}"#;
    let v = json(&ellsurf(&["lattice", "signature", "--lattice", degenerate]));
    assert_eq!(v, serde_json::json!({"positive": 0, "negative": 2, "null": 1}));
    let v = json(&ellsurf(&["lattice", "radical", "--lattice", degenerate]));
    assert_eq!(v["radical"], serde_json::json!([[1, 0, 0]]));
    assert_eq!(v["quotient"]["rank"], 2);
    let v = json(&ellsurf(&["lattice", "discriminant", "--lattice", r#"{"rank":1,"gram":[[-6]]}"#]));
    assert_eq!(v["order"], 6);
    let v = json(&ellsurf(&["lattice", "info", "--lattice", r#"{"rank":1,"gram":[["2*c + d - 1"]]}"#]));
    assert_eq!(v["symbolic"], true);
    assert_eq!(v["variables"], serde_json::json!(["c", "d"]));
}

#[test]
fn reflect_and_spinor_norm() {
    let out = ellsurf(&["reflect", "--lattice", "U", "--vector", "[1,1]"]);
    assert_eq!(out.status.code(), Some(0));
    let g = String::from_utf8(out.stdout).unwrap();
    let v = json(&ellsurf(&["spinor-norm", "--lattice", "U", "--isometry", &g]));
    assert_eq!(v["spinor_norm"], -1);
    let v = json(&ellsurf(&["factor", "--lattice", "U", "--isometry", &g]));
    assert_eq!(v["length"], 1);
}

#[test]
fn orbit_and_ebeling_on_e8() {
    let simple: Vec<Vec<i64>> = (0..8).map(|i| (0..8).map(|j| i64::from(i == j)).collect()).collect();
    // a nondegenerate lattice is its own radical quotient
    let lattice = json(&ellsurf(&["lattice", "radical", "--lattice", "-E8"]))["quotient"].clone();
    let delta = serde_json::json!({ "lattice": lattice, "vectors": simple }).to_string();
    let v = json(&ellsurf(&["orbit", "--delta", &delta, "--seed", "[1,0,0,0,0,0,0,0]"]));
    assert_eq!(v["count"], 240);
    let out = ellsurf(&["ebeling", "check", "--delta", &delta]);
    // definite: no λ-configuration, so the check fails with exit 1
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["spans"], true);
}

#[test]
fn semidefinite_check_on_rational_model() {
    let model = json(&ellsurf(&["surface", "delta", "--spec", RATIONAL]));
    let delta = model["delta"].to_string();
    let summand = model["semidefinite_summand"].to_string();
    let out = ellsurf(&["semidefinite", "check", "--delta", &delta, "--summand", &summand]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["conclusion_applicable"], true);
}

#[test]
fn surface_builders() {
    let v = json(&ellsurf(&["surface", "lattice", "--spec", K3]));
    assert_eq!(v["lattice"]["rank"], 22);
    assert_eq!(v["kappa"], 0);
    let v = json(&ellsurf(&["surface", "torsion", "--spec", r#"{"d":1,"q":0,"multiplicities":[3,3,3]}"#]));
    assert_eq!(v["torsion"]["invariant_factors"], serde_json::json!([3, 3]));
    let v = json(&ellsurf(&["surface", "sigma-triple", "--multiplicity", "3"]));
    assert_eq!(v["sigma"].as_array().unwrap().len(), 3);
    let out = ellsurf(&["surface", "e10"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["report"]["constraints_required"], serde_json::json!(["ell.sigma = 0"]));
    let out = ellsurf(&["surface", "generating-set", "--adjustment", "printed"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["report"]["residuals"]["beta8.gamma"], "A*c + B*c");
}

#[test]
fn verify_paper_sections() {
    for section in ["1", "2", "3", "4", "5"] {
        let out = ellsurf(&["verify-paper", "--section", section]);
        assert_eq!(out.status.code(), Some(0), "section {section}");
        let v = json(&out);
        assert_eq!(v["failed"], 0);
        let id: u64 = section.parse().unwrap();
        assert!(v["checks"].as_array().unwrap().iter().all(|c| c["section"] == id));
    }
    assert_eq!(ellsurf(&["verify-paper", "--section", "6"]).status.code(), Some(2));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("ellsurf-cli-test-{}.json", std::process::id()));
    let out = ellsurf(&["surface", "invariants", "--spec", K3, "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["case_tag"], "K3");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn errors_exit_with_two() {
    assert_eq!(ellsurf(&["lattice", "info", "--bogus"]).status.code(), Some(2));
    assert_eq!(ellsurf(&["lattice", "info", "--lattice", "{not json"]).status.code(), Some(2));
    assert_eq!(ellsurf(&["lattice", "info", "--lattice", "/nonexistent/file.json"]).status.code(), Some(2));
    let out = ellsurf(&["reflect", "--lattice", "U", "--vector", "[1,1,1]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension mismatch"));
    assert_eq!(ellsurf(&["decide", "--spec", K3, "--isometry", &identity(3)]).status.code(), Some(2));
    let not_iso = r#"{"matrix":[[1,1],[0,1]]}"#;
    assert_eq!(ellsurf(&["spinor-norm", "--lattice", "U", "--isometry", not_iso]).status.code(), Some(2));
    let bad_spec = r#"{"d":0,"q":0,"multiplicities":[]}"#;
    assert_eq!(ellsurf(&["surface", "invariants", "--spec", bad_spec]).status.code(), Some(2));
    assert_eq!(ellsurf(&["decide", "--spec", K3, "--isometry", &identity(22), "--witness-parity", "0"]).status.code(), Some(2));
}
