//! Finite-dimensional representation theory over Q(√−1) for the
//! archimedean cohomological computations: polynomial models of GL2, GL3
//! and SO(3) modules, relative Lie algebra cochains, invariant pairings and
//! the explicit cohomology classes built from them.

pub mod classes;
pub mod gl2;
pub mod gl3;
pub mod lie;
pub mod module;
pub mod pairing;
pub mod so3;
pub mod weights;
pub mod wedge;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("polynomial lives in a different ring than the module")]
    ModuleMismatch,
    #[error("polynomial is not in the module")]
    NotInModule,
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("parity condition violated: {0}")]
    Parity(String),
    #[error("singular group element")]
    Singular,
    #[error("internal error: {0}")]
    Internal(String),
    #[error("expected a {expected}-dimensional solution space, found {found}")]
    KernelDimension { expected: usize, found: usize },
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("the pair of weights is not critical")]
    NonCritical,
}
