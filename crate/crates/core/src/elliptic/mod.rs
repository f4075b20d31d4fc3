//! Homology lattices of elliptic surfaces and their sphere configurations.

mod delta_model;
mod full;
mod rational;
mod spec;
mod symbolic;
mod torsion;

pub use delta_model::{build_delta_model, build_sigma_triple, DeltaModel, SigmaTriple};
pub use full::{build_full_h2bar, FullLattice, ODD_SEARCH_BOUND};
pub use rational::{build_x1_minus_nf, RationalModel};
pub use spec::{CaseTag, Parity, SurfaceInvariants, SurfaceSpec};
pub use symbolic::{
    build_e10_basis, symbolic_sigma_pairings, verify_generating_set, Adjustment, Claim, ConstructionReport,
    E10Construction, SymVector, SymbolicConstruction,
};
pub use torsion::torsion_of_complement;
