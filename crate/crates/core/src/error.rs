//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by exact linear algebra, geometry, group-law and
/// configuration-generation routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input that violates an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Matrix or vector entries taken from more than one field.
    #[error("entries belong to different fields")]
    MixedField,

    /// Row/column or coefficient-length mismatch.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A Hilbert function was differenced before it stabilized.
    #[error("hilbert function not computed to stabilization (degree sum would be wrong)")]
    NotStabilized,

    /// Davis decomposition requested where the difference function does not
    /// repeat a value in consecutive degrees.
    #[error("no maximal growth: dh({t}) = {a} but dh({t}+1) = {b}")]
    NoMaximalGrowth { t: usize, a: u64, b: u64 },

    /// Query outside the domain where the quantity is defined.
    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// Linear system empty by degree reasons (t < 3m regime).
    #[error("empty system: {0}")]
    EmptySystem(String),

    /// Randomized generation failed its structural audit after the retry cap.
    #[error("generation failure: {0}")]
    GenerationFailure(String),

    /// A point claimed to lie on a curve does not.
    #[error("point does not lie on the given curve")]
    PointOffCurve,

    /// Unsupported operation for the given curve kind or field.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Point-file parse error with 1-based line number.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
