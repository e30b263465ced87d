//! Crate-wide error type.
//!
//! One enum covers every module so callers (CLI, wasm bindings, tests) can
//! map failures to exit codes or messages without juggling conversions.

use std::fmt;

use crate::rational::Rat;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A coefficient beyond the truncation order was requested.
    OrderExceeded { requested: usize, order: usize },
    /// Division by a series with zero constant term (and no cancelling
    /// power of x in the numerator).
    DivisionByNonUnit,
    /// Composition `a(b)` with `b(0) != 0`.
    CompositionByUnit,
    /// Reversion of a series with `f(0) != 0` or `f'(0) = 0`.
    NotReversible,
    /// Square root of a series whose constant term is not the square of a
    /// rational.
    NoSquareRoot { constant_term: Rat },
    /// The pair `(g, f)` does not satisfy `g(0)=1`, `f(0)=0`, `f'(0)=1`.
    InvalidRiordanPair(String),
    /// A matrix entry that must be an integer came out rational.
    NonIntegerEntry { row: usize, col: usize, value: Rat },
    /// `embed` failed: `sqrt(v/x)` is not an integer series. Carries the
    /// first offending coefficient and the order that was checked.
    NotEmbeddable {
        index: usize,
        coefficient: Rat,
        order_checked: usize,
    },
    /// Triangles passed to `interleave` have different row counts.
    ShapeMismatch { left: usize, right: usize },
    /// A production matrix is too small for the requested generation.
    SizeExceeded { requested: usize, size: usize },
    /// `production_of` needs a unit-diagonal lower-triangular matrix.
    NotUnitTriangular { row: usize },
    /// A production matrix row has support beyond the superdiagonal, so
    /// generation would not stay lower-triangular.
    NotGenerative { row: usize, col: usize },
    /// An eventually-periodic sequence was built with an empty period.
    EmptyPeriod,
    /// A bidiagonal spec entry is zero.
    ZeroSpecEntry { index: usize },
    /// Expression text failed to parse.
    Syntax {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },
    /// The OEIS query had no terms.
    EmptyQuery,
    /// No network and no cache hit for an OEIS query.
    NetworkUnavailable(String),
    /// The OEIS response could not be parsed.
    MalformedResponse(String),
    /// Filesystem trouble (cache reads/writes).
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderExceeded { requested, order } => write!(
                f,
                "coefficient {requested} requested but series only has order {order}"
            ),
            Error::DivisionByNonUnit => {
                write!(f, "division by a series with zero constant term")
            }
            Error::CompositionByUnit => {
                write!(f, "composition a(b) requires b(0) = 0")
            }
            Error::NotReversible => {
                write!(f, "reversion requires f(0) = 0 and f'(0) != 0")
            }
            Error::NoSquareRoot { constant_term } => write!(
                f,
                "series square root requires a rational-square constant term, got {constant_term}"
            ),
            Error::InvalidRiordanPair(msg) => write!(f, "invalid Riordan pair: {msg}"),
            Error::NonIntegerEntry { row, col, value } => write!(
                f,
                "entry ({row}, {col}) should be an integer but evaluated to {value}"
            ),
            Error::NotEmbeddable {
                index,
                coefficient,
                order_checked,
            } => write!(
                f,
                "not embeddable: sqrt(v/x) has non-integer coefficient {coefficient} at x^{index} (checked through order {order_checked})"
            ),
            Error::ShapeMismatch { left, right } => write!(
                f,
                "triangles must have the same number of rows, got {left} and {right}"
            ),
            Error::SizeExceeded { requested, size } => write!(
                f,
                "production matrix of size {size} cannot generate {requested} rows"
            ),
            Error::NotUnitTriangular { row } => {
                write!(f, "matrix is not unit-lower-triangular at row {row}")
            }
            Error::NotGenerative { row, col } => write!(
                f,
                "production matrix row {row} has support at column {col}, beyond the superdiagonal"
            ),
            Error::EmptyPeriod => write!(f, "period must be nonempty"),
            Error::ZeroSpecEntry { index } => {
                write!(f, "bidiagonal spec entry {index} is zero")
            }
            Error::Syntax {
                offset,
                expected,
                found,
            } => write!(
                f,
                "syntax error at offset {offset}: expected {}, found {found}",
                expected.join(" | ")
            ),
            Error::EmptyQuery => write!(f, "sequence query must contain at least one term"),
            Error::NetworkUnavailable(msg) => write!(f, "network unavailable: {msg}"),
            Error::MalformedResponse(msg) => write!(f, "malformed response: {msg}"),
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
