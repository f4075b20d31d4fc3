use anyhow::{bail, Result};
use clap::{Args, Subcommand, ValueEnum};
use ellsurf_core::elliptic::{
    build_delta_model, build_e10_basis, build_full_h2bar, build_sigma_triple, symbolic_sigma_pairings,
    torsion_of_complement, verify_generating_set, Adjustment,
};
use ellsurf_core::lattice::{factor_into_reflections, positive_orientation_character, reflect, spinor_norm};
use ellsurf_core::realize::decide;
use ellsurf_core::roots::{check_ebeling, check_semidefinite_lemma, enumerate_vectors_of_square, orbit_closure};
use ellsurf_core::Lattice;
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::formats::*;
use crate::verify;

/// Result of a command: the JSON document and whether its check passed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub value: Value,
    pub ok: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, ok: true }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of a lattice.
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
    /// Vectors of a given square.
    Roots {
        #[command(subcommand)]
        op: RootsOp,
    },
    /// Closure of a seed vector under the reflections in a Δ-set.
    Orbit {
        #[arg(long)]
        delta: String,
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        #[arg(long)]
        bound: Option<BigInt>,
    },
    /// Matrix of the reflection in a vector.
    Reflect {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Real spinor norm and positive orientation character of an isometry.
    SpinorNorm {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        isometry: String,
    },
    /// Factorization of an isometry into reflections.
    Factor {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        isometry: String,
    },
    /// Hypotheses of the reflection-group generation criterion.
    Ebeling {
        #[command(subcommand)]
        op: CheckOp,
    },
    /// Hypotheses of the semi-definite splitting criterion.
    Semidefinite {
        #[command(subcommand)]
        op: SemidefiniteOp,
    },
    /// Homology lattices of elliptic surfaces.
    Surface {
        #[command(subcommand)]
        op: SurfaceOp,
    },
    /// Whether an isometry of the surface model is induced by a diffeomorphism.
    Decide {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        isometry: String,
        /// Spinor norm of a diffeomorphism reversing k, when known.
        #[arg(long, allow_hyphen_values = true, value_parser = clap::value_parser!(i8).range(-1..=1))]
        witness_parity: Option<i8>,
    },
    /// Re-check every construction and criterion on built-in inputs.
    VerifyPaper {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        section: Option<u8>,
    },
}

#[derive(Debug, Args)]
pub struct LatticeArg {
    /// JSON file, `-` for stdin, inline JSON, or one of `-E8`, `-E10`, `U`.
    #[arg(long, allow_hyphen_values = true)]
    pub lattice: String,
}

#[derive(Debug, Subcommand)]
pub enum LatticeOp {
    Info(LatticeArg),
    Radical(LatticeArg),
    Signature(LatticeArg),
    Discriminant(LatticeArg),
}

#[derive(Debug, Subcommand)]
pub enum RootsOp {
    Enumerate {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long, allow_hyphen_values = true)]
        square: BigInt,
        #[arg(long)]
        bound: Option<BigInt>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckOp {
    Check {
        #[arg(long)]
        delta: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum SemidefiniteOp {
    Check {
        #[arg(long)]
        delta: String,
        /// JSON array of basis vectors of the unimodular summand.
        #[arg(long)]
        summand: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum AdjustmentArg {
    Printed,
    Corrected,
}

#[derive(Debug, Subcommand)]
pub enum SurfaceOp {
    Invariants {
        #[arg(long)]
        spec: String,
    },
    /// The unimodular lattice with canonical class.
    Lattice {
        #[arg(long)]
        spec: String,
    },
    /// The lattice spanned by the sphere configuration, with its Δ-set.
    Delta {
        #[arg(long)]
        spec: String,
    },
    Torsion {
        #[arg(long)]
        spec: String,
    },
    SigmaTriple {
        #[arg(long)]
        multiplicity: i64,
    },
    /// The −E10 basis built from an E8 block, σ and a fibre.
    E10,
    /// Symbolic verification of the generating set of the irregular summand.
    GeneratingSet {
        #[arg(long, value_enum, default_value = "corrected")]
        adjustment: AdjustmentArg,
    },
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Lattice { op } => lattice(op),
        Command::Roots { op: RootsOp::Enumerate { lattice, square, bound } } => {
            let l = load_lattice(&lattice.lattice)?;
            let vs = enumerate_vectors_of_square(&l, square, bound.as_ref())?;
            Ok(Outcome::ok(json!({
                "square": int_to_json(square),
                "count": vs.len(),
                "vectors": vectors_to_json(&vs),
            })))
        }
        Command::Orbit { delta, seed, bound } => {
            let d = load_json::<DeltaSetJson>(delta, "delta set")?.to_delta()?;
            let seed = load_vector(seed)?;
            let orbit = orbit_closure(&d, &[seed], bound.as_ref())?;
            Ok(Outcome::ok(json!({ "count": orbit.len(), "vectors": vectors_to_json(&orbit) })))
        }
        Command::Reflect { lattice, vector } => {
            let l = load_lattice(&lattice.lattice)?;
            let v = load_vector(vector)?;
            check_dim(&l, v.len())?;
            let g = reflect(&l, &v)?;
            Ok(Outcome::ok(serde_json::to_value(IsometryJson::from_isometry(&g))?))
        }
        Command::SpinorNorm { lattice, isometry } => {
            let l = load_lattice(&lattice.lattice)?;
            let g = load_json::<IsometryJson>(isometry, "isometry")?.to_isometry(&l)?;
            Ok(Outcome::ok(json!({
                "spinor_norm": spinor_norm(&l, &g)?,
                "orientation_character": positive_orientation_character(&l, &g)?,
                "determinant": int_to_json(&g.determinant()),
            })))
        }
        Command::Factor { lattice, isometry } => {
            let l = load_lattice(&lattice.lattice)?;
            let g = load_json::<IsometryJson>(isometry, "isometry")?.to_isometry(&l)?;
            let w = factor_into_reflections(&l, &g)?;
            let squares: Vec<Value> = w
                .factors
                .iter()
                .map(|v| l.norm(v).map(|s| int_to_json(&s)))
                .collect::<Result<_, _>>()?;
            Ok(Outcome {
                ok: w.round_trips(&l, &g)?,
                value: json!({
                    "length": w.len(),
                    "vectors": vectors_to_json(&w.factors),
                    "squares": squares,
                    "spinor_norm": w.spinor_norm(&l)?,
                }),
            })
        }
        Command::Ebeling { op: CheckOp::Check { delta } } => {
            let d = load_json::<DeltaSetJson>(delta, "delta set")?.to_delta()?;
            let r = check_ebeling(&d)?;
            Ok(Outcome { ok: r.conclusion_applicable, value: ebeling_to_json(&r) })
        }
        Command::Semidefinite { op: SemidefiniteOp::Check { delta, summand } } => {
            let d = load_json::<DeltaSetJson>(delta, "delta set")?.to_delta()?;
            let summand = load_vectors(summand)?;
            let r = check_semidefinite_lemma(&d, &summand)?;
            Ok(Outcome { ok: r.conclusion_applicable, value: semidefinite_to_json(&r) })
        }
        Command::Surface { op } => surface(op),
        Command::Decide { spec, isometry, witness_parity } => {
            if *witness_parity == Some(0) {
                bail!("--witness-parity must be +1 or -1");
            }
            let s = load_spec(spec)?;
            let full = build_full_h2bar(&s)?;
            let g = load_json::<IsometryJson>(isometry, "isometry")?.to_isometry(&full.lattice)?;
            let v = decide(&s, &g, *witness_parity)?;
            Ok(Outcome::ok(verdict_to_json(&v)))
        }
        Command::VerifyPaper { section } => {
            let b = verify::run(*section);
            Ok(Outcome { ok: b.all_pass(), value: serde_json::to_value(&b)? })
        }
    }
}

fn check_dim(l: &Lattice, found: usize) -> Result<()> {
    if found != l.rank() {
        bail!(ellsurf_core::Error::DimensionMismatch { expected: l.rank(), found });
    }
    Ok(())
}

fn lattice(op: &LatticeOp) -> Result<Outcome> {
    match op {
        LatticeOp::Info(a) => {
            let l = load_lattice(&a.lattice)?;
            if l.is_symbolic() {
                let mut vars: Vec<String> = l.gram().iter().flatten().flat_map(|s| s.variables()).collect();
                vars.sort();
                vars.dedup();
                return Ok(Outcome::ok(json!({
                    "rank": l.rank(),
                    "label": l.label(),
                    "symbolic": true,
                    "variables": vars,
                })));
            }
            Ok(Outcome::ok(json!({
                "rank": l.rank(),
                "label": l.label(),
                "symbolic": false,
                "signature": signature_to_json(&l.signature()?),
                "determinant": int_to_json(&l.determinant()?),
                "even": l.is_even()?,
                "unimodular": l.is_unimodular()?,
            })))
        }
        LatticeOp::Radical(a) => {
            let l = load_lattice(&a.lattice)?;
            let q = l.quotient_by_radical()?;
            Ok(Outcome::ok(json!({
                "radical": vectors_to_json(&q.radical),
                "quotient": LatticeJson::from_lattice(&q.lattice),
                "projection": matrix_to_json(&q.projection),
                "section": matrix_to_json(&q.section),
            })))
        }
        LatticeOp::Signature(a) => {
            let l = load_lattice(&a.lattice)?;
            Ok(Outcome::ok(signature_to_json(&l.signature()?)))
        }
        LatticeOp::Discriminant(a) => {
            let l = load_lattice(&a.lattice)?;
            Ok(Outcome::ok(group_to_json(&l.discriminant_group()?)))
        }
    }
}

fn surface(op: &SurfaceOp) -> Result<Outcome> {
    match op {
        SurfaceOp::Invariants { spec } => {
            let s = load_spec(spec)?;
            Ok(Outcome::ok(invariants_to_json(&s, &s.invariants())))
        }
        SurfaceOp::Lattice { spec } => {
            let s = load_spec(spec)?;
            let f = build_full_h2bar(&s)?;
            Ok(Outcome::ok(json!({
                "lattice": LatticeJson::from_lattice(&f.lattice),
                "k": vector_to_json(&f.k),
                "p": vector_to_json(&f.p),
                "kappa": f.kappa,
            })))
        }
        SurfaceOp::Delta { spec } => {
            let s = load_spec(spec)?;
            let m = build_delta_model(&s)?;
            Ok(Outcome::ok(json!({
                "delta": DeltaSetJson::from_delta(&m.delta),
                "labels": m.labels,
                "fibre": m.fibre.as_deref().map(vector_to_json),
                "semidefinite_summand": m.semidefinite_summand.as_deref().map(vectors_to_json),
                "notes": m.notes,
            })))
        }
        SurfaceOp::Torsion { spec } => {
            let s = load_spec(spec)?;
            let (m, t) = torsion_of_complement(s.multiplicities());
            Ok(Outcome::ok(json!({ "m": int_to_json(&m), "torsion": group_to_json(&t) })))
        }
        SurfaceOp::SigmaTriple { multiplicity } => {
            let t = build_sigma_triple(*multiplicity)?;
            Ok(Outcome::ok(json!({
                "lattice": LatticeJson::from_lattice(&t.lattice),
                "sigma": vectors_to_json(&t.sigma),
                "f_m": vector_to_json(&t.f_m),
                "f": vector_to_json(&t.f),
            })))
        }
        SurfaceOp::E10 => {
            let c = build_e10_basis(&symbolic_sigma_pairings());
            let basis: Vec<Vec<Value>> =
                c.basis.iter().map(|v| v.iter().map(scalar_to_json).collect()).collect();
            let report = &c.construction.report;
            Ok(Outcome {
                ok: report.all_hold(),
                value: json!({
                    "ambient": LatticeJson::from_lattice(&c.construction.lattice),
                    "basis": basis,
                    "specialized": LatticeJson::from_lattice(&c.specialized),
                    "report": construction_report_to_json(report),
                }),
            })
        }
        SurfaceOp::GeneratingSet { adjustment } => {
            let adj = match adjustment {
                AdjustmentArg::Printed => Adjustment::AsPrinted,
                AdjustmentArg::Corrected => Adjustment::RadicalCorrected,
            };
            let c = verify_generating_set(adj);
            Ok(Outcome {
                ok: c.report.all_hold(),
                value: json!({
                    "lattice": LatticeJson::from_lattice(&c.lattice),
                    "report": construction_report_to_json(&c.report),
                }),
            })
        }
    }
}
