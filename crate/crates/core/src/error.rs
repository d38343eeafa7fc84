use std::fmt;

/// Errors surfaced by the exact kernels and the maps built on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Mismatched sizes or an index outside its range.
    Dimension(String),
    /// A matrix whose row/column counts rule the operation out.
    Shape(String),
    /// An operation that needs at least one operand got none.
    Arity(String),
    /// A degree bound smaller than the degree of the polynomial.
    DegreeBound(String),
    /// A truncation order too small to represent the result exactly.
    Truncation(String),
    /// A dense index family with a missing entry.
    Completeness(String),
    /// A singular matrix where an invertible one is required.
    Singular(String),
    /// Input that is not in the image of the unitriangular group.
    Normalization(String),
    /// A linear system with no solution (data not from a matrix).
    NoSolution(String),
    /// Division by zero (zero tau-function, zero denominator).
    DivisionByZero(String),
    /// Malformed textual input (rationals, bitstrings, files).
    Parse(String),
    /// A guarded impossibility; reaching it means a bug, not bad input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension(m) => write!(f, "dimension error: {m}"),
            Error::Shape(m) => write!(f, "shape error: {m}"),
            Error::Arity(m) => write!(f, "arity error: {m}"),
            Error::DegreeBound(m) => write!(f, "degree bound error: {m}"),
            Error::Truncation(m) => write!(f, "truncation error: {m}"),
            Error::Completeness(m) => write!(f, "completeness error: {m}"),
            Error::Singular(m) => write!(f, "singular matrix: {m}"),
            Error::Normalization(m) => write!(f, "normalization error: {m}"),
            Error::NoSolution(m) => write!(f, "no solution: {m}"),
            Error::DivisionByZero(m) => write!(f, "division by zero: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
