//! Mellin–Barnes quadrature and Whittaker functions.

pub mod contour;
pub mod grid;
pub mod whittaker;

use archi_gamma::GammaError;
use thiserror::Error;

pub use contour::{contour_integral, ContourSpec, ContourValue, QuadratureRule};
pub use grid::{build_grid, build_grid_with, cache_key, cached_grid, GridGeometry, GridOptions, SelfTestReport, WhittakerGrid};
pub use num_complex::Complex64;
pub use whittaker::{
    monomial_expansion, whittaker_gl2, whittaker_gl3, whittaker_gl3_torus, whittaker_gl3_with, Contours,
    ExpansionPath, Gl3Index, MonomialKernel, WhittakerEvaluator, WhittakerSpec,
};

#[derive(Debug, Error)]
pub enum MellinError {
    #[error("invalid contour: {0}")]
    InvalidContour(String),
    #[error("contour pinched: {0}")]
    Pinched(String),
    #[error("truncation insufficient: {0}")]
    Truncation(String),
    #[error("invalid Whittaker spec: {0}")]
    InvalidSpec(String),
    #[error("grid: {0}")]
    Grid(String),
    #[error("grid rejected: {0}")]
    GridRejected(String),
    #[error("grid cache: {0}")]
    CacheFormat(String),
    #[error(transparent)]
    Gamma(#[from] GammaError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
