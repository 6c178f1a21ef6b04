//! Error type shared by all library operations.

use crate::parampoly::ParamPoly;
use crate::unipoly::UniPoly;

/// Errors reported by exact linear algebra, exterior algebra, and the
/// invariant-subspace search.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: u32, n: u32 },

    #[error("index sequence is not strictly increasing")]
    NotIncreasing,

    #[error("index {0} is already a member of the set")]
    AlreadyMember(u32),

    #[error("index sets overlap")]
    Overlap,

    #[error("exterior degree {d} out of range for ambient dimension {n}")]
    DegreeOutOfRange { d: u32, n: u32 },

    #[error("zero multivector has no decomposability classification")]
    ZeroMultivector,

    #[error("divisor kernel has dimension {found}, expected {expected}; input is not totally decomposable")]
    KernelDimension { expected: usize, found: usize },

    #[error("matrix {matrix} has a non-rational spectrum; residual factor {residual}")]
    UnsupportedSpectrum { matrix: usize, residual: UniPoly },

    #[error("shift {shift} leaves matrix {matrix} singular")]
    SingularShift { matrix: usize, shift: String },

    #[error("constraint system in {k} parameters exceeds the case-analysis budget {k_max}")]
    CaseBudgetExceeded {
        k: usize,
        k_max: usize,
        constraints: Vec<ParamPoly>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
