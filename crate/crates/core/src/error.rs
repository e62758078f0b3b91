use std::fmt;

/// Errors reported by the library.
///
/// Every fallible operation states its preconditions; violating one
/// yields a variant below rather than a silent wrong answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An index (cell, Walsh index, Haar index, kernel order, ...) is
    /// outside the range admitted by the grid or table.
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },
    /// A level / depth parameter exceeds the grid resolution.
    LevelOutOfRange { level: usize, resolution: u32 },
    /// A vector's length does not match the dimension of its space.
    DimensionMismatch { expected: usize, got: usize },
    /// Two objects that must live on the same grid or in the same
    /// normed space do not.
    SpaceMismatch(&'static str),
    /// The operation requires Euclidean domain and codomain.
    NonEuclidean,
    /// An enumeration (sign patterns, unit-ball corners) would exceed
    /// the configured cap.
    BudgetExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    /// The input function is identically zero where a nonzero input is
    /// required (norming quotients are undefined at zero).
    ZeroFunction,
    /// A martingale's levels fail the conditional-expectation
    /// consistency check.
    NotAdapted { level: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { what, index, limit } => {
                write!(f, "{what} index {index} out of range (limit {limit})")
            }
            Error::LevelOutOfRange { level, resolution } => {
                write!(f, "level {level} exceeds grid resolution q={resolution}")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::SpaceMismatch(what) => write!(f, "space mismatch: {what}"),
            Error::NonEuclidean => {
                write!(f, "operation requires Euclidean domain and codomain")
            }
            Error::BudgetExceeded {
                what,
                requested,
                cap,
            } => {
                write!(f, "{what} {requested} exceeds cap {cap}")
            }
            Error::ZeroFunction => write!(f, "input function is identically zero"),
            Error::NotAdapted { level } => {
                write!(f, "martingale levels inconsistent at level {level}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
