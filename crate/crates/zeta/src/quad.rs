//! Trapezoid sums over the (ln a1, ln a2) nodes of a Whittaker grid.
//!
//! The integrands are analytic in u = ln a with power decay e^{p u} as
//! u → −∞ and double-exponential decay as u → +∞, so the plain trapezoid
//! rule converges like e^{−π²/h}. The lower edge of each axis is placed
//! where the leading power has fallen to `cutoff`.

use std::path::PathBuf;

use archi_mellin::{build_grid_with, cached_grid, ContourSpec, Contours, Gl3Index, GridGeometry, GridOptions, WhittakerGrid, WhittakerSpec};
use num_complex::Complex64;
use serde::Serialize;

use crate::ZetaError;

#[derive(Clone, Debug, PartialEq)]
pub struct QuadConfig {
    /// Height, node count and rule of each Mellin–Barnes line.
    pub line: ContourSpec,
    /// Distance of the lines below a = 1 to the right of the poles they must clear.
    pub offsets: (f64, f64),
    /// Abscissae of the lines above a = 1.
    pub right: (f64, f64),
    /// Largest node spacing in ln a.
    pub step: f64,
    /// Upper end of the window in ln a.
    pub upper: f64,
    /// Size of the leading power term at the lower window edge, relative to 1 at a = 1.
    pub cutoff: f64,
    pub grid: GridOptions,
    pub cache_dir: Option<PathBuf>,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            line: ContourSpec::default(),
            offsets: (0.5, 0.5),
            right: (2.0, 2.0),
            step: 0.1,
            upper: 2.5,
            cutoff: 1e-15,
            // the sums read node values only; the probes guard against gross errors
            grid: GridOptions { probes: 12, tolerance: 1e-6, ..GridOptions::default() },
            cache_dir: None,
        }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<(), ZetaError> {
        let ok = self.step > 0.0
            && self.step.is_finite()
            && self.cutoff > 0.0
            && self.cutoff < 1.0
            && self.offsets.0 > 0.0
            && self.offsets.1 > 0.0
            && self.right.0 > 0.0
            && self.right.1 > 0.0
            && self.upper.is_finite();
        if !ok {
            return Err(ZetaError::InvalidParams(format!(
                "quadrature config: step {}, cutoff {}, offsets {:?}, upper {}",
                self.step, self.cutoff, self.offsets, self.upper
            )));
        }
        Ok(())
    }

    /// Window (lo, hi) for an axis whose integrand behaves like a^p near 0.
    pub fn window(&self, p: f64) -> Result<(f64, f64), ZetaError> {
        if !(p > 0.0) {
            return Err(ZetaError::Divergent(format!("integrand grows like a^{p} at a = 0")));
        }
        Ok((self.cutoff.ln() / p, self.upper))
    }

    /// Lines for one patch of W_j. Below a = 1 they sit `offsets` to the
    /// right of the rightmost poles −min(j1, (ℓ−1)/2), −min(j3, (ℓ−1)/2);
    /// above a = 1 they sit at `right`. The rounding error of the
    /// Mellin–Barnes sum scales like a^{1−c}, so each side gets the line
    /// that keeps it small.
    pub fn contours(&self, ell: u32, j: [u32; 3], upper: (bool, bool)) -> Contours {
        let half = (ell as f64 - 1.0) / 2.0;
        let c1 = if upper.0 { self.right.0 } else { -half.min(j[0] as f64) + self.offsets.0 };
        let c2 = if upper.1 { self.right.1 } else { -half.min(j[2] as f64) + self.offsets.1 };
        Contours { first: self.line.with_abscissa(c1), second: self.line.with_abscissa(c2) }
    }

    fn build(&self, spec: &WhittakerSpec, geometry: &GridGeometry, contours: &Contours) -> Result<(WhittakerGrid, bool), ZetaError> {
        Ok(match &self.cache_dir {
            Some(dir) => cached_grid(dir, spec, geometry, contours, &self.grid)?,
            None => (build_grid_with(spec, geometry, contours, &self.grid)?, false),
        })
    }
}

/// One quadrant of a [`TorusGrid`]; node (p, q) sits at lattice index
/// (start.0 + p, start.1 + q).
#[derive(Clone, Debug)]
pub struct Patch {
    pub start: (i64, i64),
    pub grid: WhittakerGrid,
}

/// W_j on the lattice u = k·h, split at u = 0 on each axis.
#[derive(Clone, Debug)]
pub struct TorusGrid {
    pub h: f64,
    /// Inclusive lattice index ranges.
    pub k1: (i64, i64),
    pub k2: (i64, i64),
    pub patches: Vec<Patch>,
    pub cache_hits: usize,
}

impl TorusGrid {
    pub fn build(config: &QuadConfig, spec: &WhittakerSpec, u1: (f64, f64), u2: (f64, f64)) -> Result<Self, ZetaError> {
        let (ell, j) = match *spec {
            WhittakerSpec::Gl3 { ell, index: Gl3Index::Monomial(j), .. } => (ell, j),
            _ => return Err(ZetaError::InvalidParams(format!("torus grids take a monomial GL(3) spec, got {spec:?}"))),
        };
        let h = config.step;
        let span = |u: (f64, f64)| ((u.0 / h).floor().min(-1.0) as i64, (u.1 / h).ceil().max(1.0) as i64);
        let (k1, k2) = (span(u1), span(u2));
        // lower halves k ≤ 0, upper halves k ≥ 1
        let halves = |k: (i64, i64)| [(k.0, 0, false), (1, k.1, true)];
        let mut patches = Vec::new();
        let mut cache_hits = 0;
        for &(a1, b1, up1) in &halves(k1) {
            for &(a2, b2, up2) in &halves(k2) {
                let geometry = GridGeometry {
                    u1: (a1 as f64 * h, b1 as f64 * h),
                    n1: (b1 - a1 + 1) as usize,
                    u2: (a2 as f64 * h, b2 as f64 * h),
                    n2: (b2 - a2 + 1) as usize,
                };
                let (grid, hit) = config.build(spec, &geometry, &config.contours(ell, j, (up1, up2)))?;
                cache_hits += hit as usize;
                patches.push(Patch { start: (a1, a2), grid });
            }
        }
        Ok(Self { h, k1, k2, patches, cache_hits })
    }

    pub fn nodes(&self) -> (usize, usize) {
        ((self.k1.1 - self.k1.0 + 1) as usize, (self.k2.1 - self.k2.0 + 1) as usize)
    }

    pub fn window(&self) -> ((f64, f64), (f64, f64)) {
        let h = self.h;
        ((self.k1.0 as f64 * h, self.k1.1 as f64 * h), (self.k2.0 as f64 * h, self.k2.1 as f64 * h))
    }

    pub fn probe_error(&self) -> f64 {
        self.patches.iter().map(|p| p.grid.report.max_error).fold(0.0, f64::max)
    }

    /// ∬ f(u1, u2, W(e^{u1}, e^{u2})) du1 du2 by the trapezoid rule on the
    /// lattice. `p_low` are the small-a exponents of the integrand on each
    /// axis, used to bound the cut tails.
    pub fn integrate(&self, p_low: (f64, f64), f: impl Fn(f64, f64, Complex64) -> Complex64) -> TorusSum {
        let h = self.h;
        let mut value = Complex64::new(0.0, 0.0);
        let mut coarse = Complex64::new(0.0, 0.0);
        let (mut lo1, mut lo2, mut hi) = (0.0, 0.0, 0.0);
        for patch in &self.patches {
            let g = &patch.grid.geometry;
            for p in 0..g.n1 {
                let k = patch.start.0 + p as i64;
                for q in 0..g.n2 {
                    let l = patch.start.1 + q as i64;
                    let v = f(k as f64 * h, l as f64 * h, patch.grid.value(p, q));
                    value += v;
                    if k % 2 == 0 && l % 2 == 0 {
                        coarse += v;
                    }
                    if k == self.k1.0 {
                        lo1 += v.norm() * h;
                    }
                    if l == self.k2.0 {
                        lo2 += v.norm() * h;
                    }
                    if k == self.k1.1 || l == self.k2.1 {
                        hi += v.norm() * h;
                    }
                }
            }
        }
        // beyond the lower edge the integrand is ≈ edge·e^{p(u − lo)}
        let tail = lo1 / p_low.0 + lo2 / p_low.1 + hi;
        TorusSum { value: value * (h * h), coarse: coarse * (4.0 * h * h), tail }
    }
}

/// A trapezoid sum with the pieces needed for error estimates.
#[derive(Clone, Copy, Debug, Default)]
pub struct TorusSum {
    pub value: Complex64,
    /// Same sum on every other node.
    pub coarse: Complex64,
    /// Estimated mass outside the window.
    pub tail: f64,
}

impl TorusSum {
    /// Σ c_k S_k.
    pub fn combine<'a>(terms: impl IntoIterator<Item = (Complex64, &'a TorusSum)>) -> TorusSum {
        let mut out = TorusSum::default();
        for (c, s) in terms {
            out.value += c * s.value;
            out.coarse += c * s.coarse;
            out.tail += c.norm() * s.tail;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadDiagnostics {
    pub u1_window: (f64, f64),
    pub u2_window: (f64, f64),
    pub nodes: (usize, usize),
    pub step: f64,
    pub line_height: f64,
    pub line_nodes: usize,
    /// Bound on the integral outside the window, relative to |value|.
    pub tail_bound: f64,
    /// |h-sum − 2h-sum| relative to |value|.
    pub coarse_difference: f64,
    /// Worst interpolation self-test error over the grids used.
    pub grid_probe_error: f64,
    pub grids: usize,
    /// Run metadata: differs between a cold and a warm cache with identical results.
    #[serde(skip)]
    pub cache_hits: usize,
}

impl QuadDiagnostics {
    pub(crate) fn new(config: &QuadConfig, grids: &[&TorusGrid], sum: &TorusSum) -> Self {
        let scale = sum.value.norm().max(f64::MIN_POSITIVE);
        let first = grids[0];
        let (u1_window, u2_window) = first.window();
        Self {
            u1_window,
            u2_window,
            nodes: first.nodes(),
            step: first.h,
            line_height: config.line.t_max,
            line_nodes: config.line.nodes,
            tail_bound: sum.tail / scale,
            coarse_difference: (sum.value - sum.coarse).norm() / scale,
            grid_probe_error: grids.iter().map(|g| g.probe_error()).fold(0.0, f64::max),
            grids: grids.iter().map(|g| g.patches.len()).sum(),
            cache_hits: grids.iter().map(|g| g.cache_hits).sum(),
        }
    }
}
