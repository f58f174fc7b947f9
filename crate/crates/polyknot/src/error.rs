//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the geometric predicates, invariants, and samplers.
///
/// Degeneracy is always surfaced, never silently resolved: a predicate that
/// cannot commit to a strict sign reports it here and the caller decides
/// whether to perturb and retry.
#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("segment has length within tolerance of zero")]
    ZeroLengthSegment,

    #[error("triangle is degenerate within tolerance")]
    DegenerateTriangle,

    #[error("segment meets the triangle boundary or plane within tolerance")]
    DegenerateContact,

    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(&'static str),

    #[error("polygon needs at least {min} vertices, got {n}")]
    PolygonTooSmall { n: usize, min: usize },

    #[error("polygon has {n} vertices, operation requires {expected}")]
    WrongVertexCount { n: usize, expected: usize },

    #[error("non-finite coordinate")]
    NonFinite,

    #[error("polygon is not embedded")]
    NotEmbedded,

    #[error("non-generic configuration: {0}")]
    NonGeneric(&'static str),

    #[error("rotation axis is degenerate within tolerance")]
    DegenerateAxis,

    #[error("label rotation {k} out of range for {n} vertices")]
    IndexOutOfRange { k: usize, n: usize },

    #[error("perturbation magnitude {magnitude} exceeds clearance/4 = {limit}")]
    PerturbationTooLarge { magnitude: f64, limit: f64 },

    #[error("failed to produce a generic perturbation after {attempts} attempts")]
    PerturbationFailed { attempts: usize },

    #[error("failed to sample an embedded polygon after {attempts} attempts")]
    SamplingFailed { attempts: usize },

    #[error("diagram has {count} crossings, state sum is limited to {max}")]
    TooManyCrossings { count: usize, max: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
