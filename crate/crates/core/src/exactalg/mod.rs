//! Exact field arithmetic and exact dense linear algebra.
//!
//! Everything else in the crate reduces to ranks and kernels computed here,
//! so these routines are the ground truth for every Hilbert-function value:
//! fraction-free elimination over the rationals, pivoted elimination over
//! prime fields, no floating point anywhere.

pub mod matrix;
pub mod numtheory;
pub mod scalar;

pub use matrix::ExactMatrix;
pub use scalar::{ExactScalar, Field};
