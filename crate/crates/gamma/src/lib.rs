//! The complex gamma function and a small calculus of Γ_R / Γ_C products:
//! exact pole detection, exact π-power extraction at (half-)integer points,
//! Barnes' two lemmas in closed form and the archimedean L-factors used by
//! the zeta integral checks.

mod barnes;
mod expr;
mod lanczos;
mod lfactor;
mod rational;

pub use barnes::{barnes_first, barnes_first_expr, barnes_second, barnes_second_expr, straight_contour};
pub use expr::{GammaExpr, GammaFactor, GammaKind, Scalar};
pub use lanczos::{gamma_c, gamma_complex, gamma_r, ln_gamma, sin_pi};
pub use lfactor::{l_factor, LFactorSpec};
pub use rational::{gamma_rational_part, RationalPart};

pub use num_complex::Complex64;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GammaError {
    #[error("pole of the gamma function at {0}")]
    Pole(String),
    #[error("gamma value overflows f64 at {0}")]
    Overflow(String),
    #[error("pinched contour: {0}")]
    PinchedContour(String),
    #[error("not evaluable in closed form: {0}")]
    NotClosedForm(String),
}
