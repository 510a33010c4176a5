//! Exact polynomials and truncated power series in two formal variables.
//!
//! Everything here uses unbounded integer coefficients. Truncation is by
//! total degree, so the `a = b = q` specialization of a series truncated at
//! `T` is exact through `q^T`.

mod monomial;
mod poly;
mod rational;
mod render;
mod trunc;
mod univariate;

pub use monomial::Monomial2;
pub use poly::Poly2;
pub use rational::RationalExpr;
pub use trunc::TruncSeries2;
pub use univariate::UniSeries;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("polynomial division leaves a remainder")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("denominator factor (1 - {0}) is not invertible as a power series")]
    NonInvertibleFactor(Monomial2),
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: u32, right: u32 },
}
