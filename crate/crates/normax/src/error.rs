//! Crate-wide error type.

use std::fmt;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument fell outside the mathematical domain of an operation.
    Domain(String),
    /// A norming pair could not be formed because its scale would not be positive.
    DegenerateScale(String),
    /// An iterative solver reached its iteration cap before meeting its tolerance.
    NoConvergence(String),
    /// A root finder found no sign change on its bracketing interval.
    NoRoot(String),
    /// Adaptive quadrature exceeded its maximum bisection depth.
    Quadrature(String),
    /// A distance evaluation was handed an unusable norming pair.
    InvalidPair(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::DegenerateScale(msg) => write!(f, "degenerate scale: {msg}"),
            Error::NoConvergence(msg) => write!(f, "no convergence: {msg}"),
            Error::NoRoot(msg) => write!(f, "no root: {msg}"),
            Error::Quadrature(msg) => write!(f, "quadrature failure: {msg}"),
            Error::InvalidPair(msg) => write!(f, "invalid pair: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
