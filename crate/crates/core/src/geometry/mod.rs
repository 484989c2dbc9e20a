//! Fat point schemes in the projective plane and their Hilbert functions by
//! exact linear algebra. This is the brute-force oracle every closed-form
//! predictor in the crate is verified against.

pub mod forms;
pub mod hilbert;
mod hvector;
mod point;
pub mod pointfile;
mod scheme;

pub use forms::HomogeneousForm;
pub use hilbert::{
    conditions_matrix, difference_function, hilbert_function, hilbert_function_stabilized,
    ideal_dim, regularity,
};
pub use hvector::{HVector, HVectorKind};
pub use point::ProjPoint;
pub use scheme::FatPointScheme;
