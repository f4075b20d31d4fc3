//! Exact integer-lattice machinery: quadratic forms over ℤ, reflection
//! groups generated by (−2)-vectors, real spinor norms, homology lattices of
//! elliptic surfaces, and a decision procedure for which lattice isometries
//! come from diffeomorphisms.
//!
//! Everything is exact (big integers, rationals, integer polynomials). The
//! crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod elliptic;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod realize;
pub mod roots;
pub mod scalar;

pub use error::{Error, Result};
pub use lattice::{FiniteAbelianGroup, IntVector, Isometry, Lattice, Signature};
pub use matrix::{IntMatrix, RatMatrix};
pub use scalar::Scalar;
