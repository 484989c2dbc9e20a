//! Exact-arithmetic Hilbert functions of fat point subschemes of P^2.
//!
//! The crate computes dim I(Z)_t, Hilbert functions and their first
//! differences for schemes Z = m1 p1 + ... + mn pn by exact linear algebra
//! over the rationals or a large prime field, generates the point
//! configurations relevant to nine double points and to points on plane
//! cubics, implements the matching closed-form predictors, and checks the
//! two sides against each other.
//!
//! Modules:
//! - [`exactalg`]: exact scalars, rank and kernel of dense matrices;
//! - [`geometry`]: fat point schemes and the brute-force Hilbert oracle;
//! - [`cubicgroup`]: the group law on the smooth locus of plane cubics;
//! - [`configs`]: seeded generators for every configuration in the corpus;
//! - [`formulas`]: closed-form difference-function predictors;
//! - [`surface`]: divisor classes on the blow-up and Riemann-Roch counting.

pub mod configs;
pub mod cubicgroup;
pub mod error;
pub mod exactalg;
pub mod formulas;
pub mod geometry;
pub mod surface;

pub use error::{Error, Result};
pub use exactalg::{ExactMatrix, ExactScalar, Field};
pub use geometry::{FatPointScheme, HVector, HVectorKind, HomogeneousForm, ProjPoint};
