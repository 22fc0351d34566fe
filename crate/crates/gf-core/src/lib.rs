//! Exact arithmetic over the finite fields `F_{p^e}` (`2 <= p <= 7`, `e <= 4`),
//! dense linear algebra with deterministic row reduction, and Jordan types of
//! nilpotent operators.
//!
//! Everything in this crate is exact: elements are indices into precomputed
//! field tables, row reduction uses first-nonzero pivoting with pivots
//! normalized to 1, and identical inputs always produce identical outputs.

mod error;
mod field;
mod jordan;
mod matrix;
mod poly;
mod prng;

pub use error::GfError;
pub use field::{Field, FieldRef, FieldSpec, MAX_E, MAX_P};
pub use jordan::{jordan_type, JordanType};
pub use matrix::{solve_linear, LinearSolution, Matrix, MatrixJson};
pub use poly::{berlekamp_factor, matrix_min_poly, Poly};
pub use prng::SplitMix64;
