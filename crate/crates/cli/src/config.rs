//! Command-line surface and the run configuration echoed into every report.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use archi_mellin::{ContourSpec, Contours, GridGeometry};
use archi_zeta::QuadConfig;

/// Environment variable consulted when `--cache-dir` is absent.
pub const CACHE_ENV: &str = "ARCHI_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(name = "archi", version, about = "Exact and numeric checks for archimedean zeta integrals on GL(3)×GL(2)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification and exit 0 (ok), 1 (mismatch) or 2 (quadrature failure).
    #[command(subcommand)]
    Verify(Check),
    /// Print numeric values.
    #[command(subcommand)]
    Eval(EvalTarget),
}

#[derive(Debug, Subcommand)]
pub enum Check {
    /// Exact representation-theory suite.
    Rep {
        #[arg(long, default_value_t = 9)]
        max_ell: u32,
        /// Test hook: corrupt one GL(3) basis vector so the suite must fail.
        #[arg(long, hide = true)]
        corrupt_basis: bool,
    },
    /// Both Barnes lemmas at random parameters against numeric contour integrals.
    Barnes {
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Z(s, W_κ, W⁻) = (√−1)^{2κ−ℓ} L(s, Σ×Π) and its symmetry under ε.
    RsZeta {
        #[command(flatten)]
        weights: RsWeights,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        epsilon: i8,
        #[arg(long, default_value_t = 1.5, allow_negative_numbers = true)]
        s: f64,
    },
    /// ⟨W_{(ℓ;0)}, W_{(ℓ;0)}⟩ against its gamma closed form.
    Adjoint {
        #[arg(long, default_value_t = 3)]
        ell: u32,
    },
    /// Rationality of the cohomological pairings: Rankin–Selberg when
    /// `--kappa` is given, adjoint otherwise.
    Membership {
        #[arg(long, default_value_t = 5)]
        ell: u32,
        #[arg(long)]
        kappa: Option<u32>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        w_sigma: i64,
        #[arg(long, allow_negative_numbers = true)]
        w_pi: Option<i64>,
        /// Both signs when absent.
        #[arg(long, allow_negative_numbers = true)]
        epsilon: Option<i8>,
        /// Every critical m when absent.
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        /// Also integrate Z numerically at each s = m + 1/2.
        #[arg(long)]
        numeric: bool,
    },
    /// Satake multiset identities, with negative controls.
    Factorization {
        /// `sym2_x_sym2` or `triple_product`; both when absent.
        #[arg(long)]
        id: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct RsWeights {
    #[arg(long, default_value_t = 5)]
    pub ell: u32,
    #[arg(long, default_value_t = 3)]
    pub kappa: u32,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub w_sigma: i64,
    /// κ mod 2 when absent.
    #[arg(long, allow_negative_numbers = true)]
    pub w_pi: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum EvalTarget {
    /// W(diag(a1a2, a2, 1)) for a monomial x1^j1 x2^j2 x3^j3 of V_ℓ.
    Whittaker {
        #[arg(long, default_value_t = 5)]
        ell: u32,
        #[arg(long, value_parser = parse_triple, default_value = "3,0,2")]
        j: [u32; 3],
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        w_sigma: i64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        epsilon: i8,
        /// Comma-separated, paired with `--a2`.
        #[arg(long, value_parser = parse_positive_list, allow_hyphen_values = true)]
        a1: Points,
        #[arg(long, value_parser = parse_positive_list, allow_hyphen_values = true)]
        a2: Points,
    },
}

/// A comma-separated list of positive coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Points(pub Vec<f64>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Text,
}

/// Knobs shared by every subcommand. Unset knobs take the subcommand's default.
#[derive(Debug, Args)]
pub struct RunArgs {
    /// Height T of each Mellin–Barnes line.
    #[arg(long = "T", global = true)]
    pub t_max: Option<f64>,
    /// Nodes per Mellin–Barnes line (even).
    #[arg(long, global = true)]
    pub nodes: Option<usize>,
    /// Lattice step in ln a for torus quadrature and Whittaker grids.
    #[arg(long, global = true)]
    pub grid: Option<f64>,
    #[arg(long, global = true)]
    pub pole_margin: Option<f64>,
    /// Lines below a = 1: distance right of the poles, as `d1,d2`.
    #[arg(long, global = true, value_parser = parse_pair)]
    pub offsets: Option<(f64, f64)>,
    /// Lines above a = 1: abscissae, as `c1,c2`.
    #[arg(long, global = true, value_parser = parse_pair)]
    pub right: Option<(f64, f64)>,
    /// Relative tolerance for the verdict.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; all cores when absent.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub t_max: Option<f64>,
    pub nodes: Option<usize>,
    pub grid: Option<f64>,
    pub pole_margin: Option<f64>,
    pub offsets: Option<(f64, f64)>,
    pub right: Option<(f64, f64)>,
    pub tol: Option<f64>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub cache_dir: Option<PathBuf>,
}

impl From<&RunArgs> for RunConfig {
    fn from(a: &RunArgs) -> Self {
        Self {
            t_max: a.t_max,
            nodes: a.nodes,
            grid: a.grid,
            pole_margin: a.pole_margin,
            offsets: a.offsets,
            right: a.right,
            tol: a.tol,
            format: a.format,
            out: a.out.clone(),
            jobs: a.jobs,
            cache_dir: a.cache_dir.clone(),
        }
    }
}

impl RunConfig {
    pub fn tolerance(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    pub fn line(&self, base: ContourSpec) -> ContourSpec {
        ContourSpec {
            t_max: self.t_max.unwrap_or(base.t_max),
            nodes: self.nodes.unwrap_or(base.nodes),
            pole_margin: self.pole_margin.unwrap_or(base.pole_margin),
            ..base
        }
    }

    pub fn contours(&self) -> Contours {
        let d = Contours::default();
        Contours { first: self.line(d.first), second: self.line(d.second) }
    }

    pub fn quad(&self) -> QuadConfig {
        let d = QuadConfig::default();
        QuadConfig {
            line: self.line(d.line),
            offsets: self.offsets.unwrap_or(d.offsets),
            right: self.right.unwrap_or(d.right),
            step: self.grid.unwrap_or(d.step),
            cache_dir: self.cache_dir.clone(),
            ..d
        }
    }

    /// The default window [−5, 4]² in ln a, at the requested step.
    pub fn geometry(&self) -> GridGeometry {
        let d = GridGeometry::default();
        match self.grid {
            Some(h) if h > 0.0 => {
                let n = ((d.u1.1 - d.u1.0) / h).round() as usize + 1;
                GridGeometry::square(d.u1.0, d.u1.1, n)
            }
            _ => d,
        }
    }
}

fn parse_f64(s: &str) -> Result<f64, String> {
    s.trim().parse::<f64>().map_err(|e| format!("{s:?}: {e}"))
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    match s.split(',').map(parse_f64).collect::<Result<Vec<_>, _>>()?.as_slice() {
        [a, b] => Ok((*a, *b)),
        _ => Err(format!("expected two comma-separated numbers, got {s:?}")),
    }
}

fn parse_triple(s: &str) -> Result<[u32; 3], String> {
    let v: Vec<u32> = s.split(',').map(|x| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}"))).collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| format!("expected three comma-separated exponents, got {s:?}"))
}

fn parse_positive_list(s: &str) -> Result<Points, String> {
    let v: Vec<f64> = s.split(',').map(parse_f64).collect::<Result<_, _>>()?;
    match v.iter().find(|x| !(**x > 0.0 && x.is_finite())) {
        Some(x) => Err(format!("torus coordinates must be positive and finite, got {x}")),
        None => Ok(Points(v)),
    }
}
