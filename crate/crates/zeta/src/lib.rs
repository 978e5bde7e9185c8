//! Numerical checks of the archimedean zeta integrals for GL(3)×GL(2) and
//! the adjoint pairing on GL(3), and the rationality of the resulting
//! cohomological pairings after removing the expected powers of 2π√−1.

mod adjoint;
mod membership;
mod quad;
mod report;
mod rs;

pub use adjoint::{adjoint_pairing, adjoint_target, AdjointReport};
pub use membership::{
    adjoint_cohomology_pairing, critical_set, reconstruct_rational, rs_cohomology_pairing, AdjointMembership,
    MembershipOptions, Reconstruction, RsMembership,
};
pub use quad::{Patch, QuadConfig, QuadDiagnostics, TorusGrid, TorusSum};
pub use report::{Cx, Deviation, Report, Verdict, REPORT_VERSION};
pub use rs::{rs_zeta, RsParams, RsZetaEngine, RsZetaReport, SymmetryCheck};

use archi_gamma::GammaError;
use archi_mellin::MellinError;
use archi_rep::RepError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ZetaError {
    #[error(transparent)]
    Mellin(#[from] MellinError),
    #[error(transparent)]
    Gamma(#[from] GammaError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("zeta integral does not converge: {0}")]
    Divergent(String),
    #[error("m = {0} is not critical for these weights")]
    NonCritical(i64),
}
