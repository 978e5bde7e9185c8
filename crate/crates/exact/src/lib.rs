//! Exact arithmetic over Q(i): scalars, sparse polynomials and dense
//! matrices with certified kernels and solves.

pub mod matrix;
pub mod poly;
pub mod qi;

pub use matrix::{ExactMatrix, Rref};
pub use poly::{Exponents, MultiPoly};
pub use qi::{binomial, factorial, rat, GaussianRational, Qi};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("solution failed re-multiplication check")]
    CertificationFailed,
}
