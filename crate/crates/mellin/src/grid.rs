//! Tabulated GL(3) Whittaker values on a log-uniform grid, with tensor
//! Lagrange interpolation in (ln a1, ln a2) and a binary cache format.

use std::io::{Read, Write};
use std::path::Path;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::contour::{ContourSpec, QuadratureRule};
use crate::whittaker::{Contours, Gl3Index, WhittakerEvaluator, WhittakerSpec};
use crate::MellinError;

const MAGIC: &[u8; 8] = b"ARCHIWG\0";
const VERSION: u32 = 1;

/// n1 × n2 points, u = ln a uniform on [lo, hi] along each axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridGeometry {
    pub u1: (f64, f64),
    pub n1: usize,
    pub u2: (f64, f64),
    pub n2: usize,
}

impl Default for GridGeometry {
    fn default() -> Self {
        Self::square(-5.0, 4.0, 120)
    }
}

impl GridGeometry {
    pub fn square(lo: f64, hi: f64, n: usize) -> Self {
        Self { u1: (lo, hi), n1: n, u2: (lo, hi), n2: n }
    }

    /// Grid with spacing at most `step` on each axis.
    pub fn with_step(u1: (f64, f64), u2: (f64, f64), step: f64) -> Self {
        let n = |r: (f64, f64)| ((r.1 - r.0) / step).ceil() as usize + 1;
        Self { u1, n1: n(u1), u2, n2: n(u2) }
    }

    pub fn validate(&self) -> Result<(), MellinError> {
        for (r, n) in [(self.u1, self.n1), (self.u2, self.n2)] {
            if n < 2 || !(r.0 < r.1) || !r.0.is_finite() || !r.1.is_finite() {
                return Err(MellinError::Grid(format!("empty geometry: {n} points on [{}, {}]", r.0, r.1)));
            }
        }
        Ok(())
    }

    pub fn step(&self) -> (f64, f64) {
        ((self.u1.1 - self.u1.0) / (self.n1 - 1) as f64, (self.u2.1 - self.u2.0) / (self.n2 - 1) as f64)
    }

    pub fn u1_at(&self, p: usize) -> f64 {
        self.u1.0 + p as f64 * self.step().0
    }

    pub fn u2_at(&self, q: usize) -> f64 {
        self.u2.0 + q as f64 * self.step().1
    }

    pub fn u1_nodes(&self) -> Vec<f64> {
        (0..self.n1).map(|p| self.u1_at(p)).collect()
    }

    pub fn u2_nodes(&self) -> Vec<f64> {
        (0..self.n2).map(|q| self.u2_at(q)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridOptions {
    /// Points per axis in the Lagrange stencil.
    pub order: usize,
    pub probes: usize,
    /// Allowed |interpolated − direct| as a fraction of the largest |W| on the grid.
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for GridOptions {
    fn default() -> Self {
        Self { order: 10, probes: 50, tolerance: 1e-8, seed: 20240601 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SelfTestReport {
    pub probes: usize,
    /// max |interpolated − direct| / peak.
    pub max_error: f64,
    pub tolerance: f64,
    /// max |W| over the grid nodes.
    pub peak: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WhittakerGrid {
    pub spec: WhittakerSpec,
    pub contours: Contours,
    pub geometry: GridGeometry,
    pub order: usize,
    /// Row-major in a1: values[p·n2 + q] = W(e^{u1_p}, e^{u2_q}).
    pub values: Vec<Complex64>,
    pub report: SelfTestReport,
}

pub fn build_grid(spec: &WhittakerSpec, geometry: &GridGeometry) -> Result<WhittakerGrid, MellinError> {
    build_grid_with(spec, geometry, &Contours::default(), &GridOptions::default())
}

pub fn build_grid_with(
    spec: &WhittakerSpec,
    geometry: &GridGeometry,
    contours: &Contours,
    options: &GridOptions,
) -> Result<WhittakerGrid, MellinError> {
    geometry.validate()?;
    if options.order < 2 || options.order > geometry.n1.min(geometry.n2) {
        return Err(MellinError::Grid(format!("interpolation order {} does not fit the grid", options.order)));
    }
    let eval = WhittakerEvaluator::new(spec, contours)?;
    let values = eval.eval_grid(&geometry.u1_nodes(), &geometry.u2_nodes());
    let peak = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let mut grid = WhittakerGrid {
        spec: *spec,
        contours: *contours,
        geometry: *geometry,
        order: options.order,
        values,
        report: SelfTestReport { probes: 0, max_error: 0.0, tolerance: options.tolerance, peak, passed: false },
    };
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let (p1, p2): (Vec<f64>, Vec<f64>) = (0..options.probes)
        .map(|_| (rng.gen_range(geometry.u1.0..geometry.u1.1), rng.gen_range(geometry.u2.0..geometry.u2.1)))
        .unzip();
    let mut max_error: f64 = 0.0;
    for (x, y) in p1.iter().zip(&p2) {
        let direct = eval.eval_grid(&[*x], &[*y])[0];
        let interp = grid.interpolate_log(*x, *y)?;
        max_error = max_error.max((direct - interp).norm() / peak);
    }
    grid.report.probes = options.probes;
    grid.report.max_error = max_error;
    grid.report.passed = max_error <= options.tolerance;
    if !grid.report.passed {
        return Err(MellinError::GridRejected(format!(
            "probe error {max_error:.2e} of peak exceeds {:.0e}",
            options.tolerance
        )));
    }
    Ok(grid)
}

/// Stencil start and Lagrange weights for x on n uniform points (in index units).
fn stencil(x: f64, n: usize, order: usize) -> (usize, Vec<f64>) {
    let start = (x.floor() as i64 - (order as i64 - 1) / 2).clamp(0, (n - order) as i64) as usize;
    let nodes: Vec<f64> = (0..order).map(|k| (start + k) as f64).collect();
    let w = (0..order)
        .map(|k| {
            let mut l = 1.0;
            for (m, xm) in nodes.iter().enumerate() {
                if m != k {
                    l *= (x - xm) / (nodes[k] - xm);
                }
            }
            l
        })
        .collect();
    (start, w)
}

impl WhittakerGrid {
    pub fn value(&self, p: usize, q: usize) -> Complex64 {
        self.values[p * self.geometry.n2 + q]
    }

    /// Interpolated W at (e^{u1}, e^{u2}).
    pub fn interpolate_log(&self, u1: f64, u2: f64) -> Result<Complex64, MellinError> {
        let g = &self.geometry;
        let eps = 1e-12;
        if u1 < g.u1.0 - eps || u1 > g.u1.1 + eps || u2 < g.u2.0 - eps || u2 > g.u2.1 + eps {
            return Err(MellinError::Grid(format!("point (e^{u1}, e^{u2}) outside the grid")));
        }
        let (h1, h2) = g.step();
        let (s1, w1) = stencil((u1 - g.u1.0) / h1, g.n1, self.order);
        let (s2, w2) = stencil((u2 - g.u2.0) / h2, g.n2, self.order);
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, wa) in w1.iter().enumerate() {
            let row: Complex64 = w2.iter().enumerate().map(|(b, wb)| self.value(s1 + a, s2 + b) * wb).sum();
            acc += row * wa;
        }
        Ok(acc)
    }

    pub fn interpolate(&self, a1: f64, a2: f64) -> Result<Complex64, MellinError> {
        if !(a1 > 0.0 && a2 > 0.0) {
            return Err(MellinError::Grid(format!("torus point ({a1}, {a2}) must be positive")));
        }
        self.interpolate_log(a1.ln(), a2.ln())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(256 + 16 * self.values.len());
        out.extend_from_slice(MAGIC);
        put_u32(&mut out, VERSION);
        match self.spec {
            WhittakerSpec::Gl3 { ell, w, eps, index } => {
                out.push(3);
                put_u32(&mut out, ell);
                put_i64(&mut out, w);
                out.push(eps as u8);
                match index {
                    Gl3Index::Spherical(i) => {
                        out.push(0);
                        put_i64(&mut out, i);
                        out.extend_from_slice(&[0; 4]);
                    }
                    Gl3Index::Monomial(j) => {
                        out.push(1);
                        for x in j {
                            put_u32(&mut out, x);
                        }
                    }
                }
            }
            WhittakerSpec::Gl2 { .. } => unreachable!("grids hold GL(3) values"),
        }
        for c in [&self.contours.first, &self.contours.second] {
            put_f64(&mut out, c.c);
            put_f64(&mut out, c.t_max);
            put_u64(&mut out, c.nodes as u64);
            out.push(match c.rule {
                QuadratureRule::Trapezoid => 0,
                QuadratureRule::GaussLegendrePanels => 1,
            });
            put_f64(&mut out, c.pole_margin);
            put_f64(&mut out, c.tail_tolerance);
        }
        let g = &self.geometry;
        for x in [g.u1.0, g.u1.1, g.u2.0, g.u2.1] {
            put_f64(&mut out, x);
        }
        put_u64(&mut out, g.n1 as u64);
        put_u64(&mut out, g.n2 as u64);
        put_u64(&mut out, self.order as u64);
        let r = &self.report;
        put_u64(&mut out, r.probes as u64);
        for x in [r.max_error, r.tolerance, r.peak] {
            put_f64(&mut out, x);
        }
        out.push(r.passed as u8);
        put_u64(&mut out, self.values.len() as u64);
        for v in &self.values {
            put_f64(&mut out, v.re);
            put_f64(&mut out, v.im);
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, MellinError> {
        let mut r = Reader { b: bytes, pos: 0 };
        if r.take(8)? != MAGIC {
            return Err(MellinError::CacheFormat("bad magic".into()));
        }
        let version = r.u32()?;
        if version != VERSION {
            return Err(MellinError::CacheFormat(format!("unsupported version {version}")));
        }
        if r.u8()? != 3 {
            return Err(MellinError::CacheFormat("not a GL(3) grid".into()));
        }
        let ell = r.u32()?;
        let w = r.i64()?;
        let eps = r.u8()? as i8;
        let index = match r.u8()? {
            0 => {
                let i = r.i64()?;
                r.take(4)?;
                Gl3Index::Spherical(i)
            }
            1 => Gl3Index::Monomial([r.u32()?, r.u32()?, r.u32()?]),
            t => return Err(MellinError::CacheFormat(format!("unknown index tag {t}"))),
        };
        let spec = WhittakerSpec::gl3(ell, w, eps, index)?;
        let mut line = || -> Result<ContourSpec, MellinError> {
            let c = r.f64()?;
            let t_max = r.f64()?;
            let nodes = r.u64()? as usize;
            let rule = match r.u8()? {
                0 => QuadratureRule::Trapezoid,
                1 => QuadratureRule::GaussLegendrePanels,
                t => return Err(MellinError::CacheFormat(format!("unknown rule {t}"))),
            };
            Ok(ContourSpec { c, t_max, nodes, rule, pole_margin: r.f64()?, tail_tolerance: r.f64()? })
        };
        let contours = Contours { first: line()?, second: line()? };
        let (a, b, c, d) = (r.f64()?, r.f64()?, r.f64()?, r.f64()?);
        let geometry = GridGeometry { u1: (a, b), n1: r.u64()? as usize, u2: (c, d), n2: r.u64()? as usize };
        geometry.validate()?;
        let order = r.u64()? as usize;
        let report = SelfTestReport {
            probes: r.u64()? as usize,
            max_error: r.f64()?,
            tolerance: r.f64()?,
            peak: r.f64()?,
            passed: r.u8()? != 0,
        };
        let n = r.u64()? as usize;
        if n != geometry.n1 * geometry.n2 {
            return Err(MellinError::CacheFormat(format!("{n} values for a {}×{} grid", geometry.n1, geometry.n2)));
        }
        let values = (0..n).map(|_| Ok(Complex64::new(r.f64()?, r.f64()?))).collect::<Result<_, MellinError>>()?;
        if r.pos != bytes.len() {
            return Err(MellinError::CacheFormat("trailing bytes".into()));
        }
        Ok(Self { spec, contours, geometry, order, values, report })
    }

    /// Whether this grid was built from exactly these inputs.
    pub fn matches(&self, spec: &WhittakerSpec, geometry: &GridGeometry, contours: &Contours, order: usize) -> bool {
        self.spec == *spec && self.geometry == *geometry && self.contours == *contours && self.order == order
    }

    pub fn save(&self, path: &Path) -> Result<(), MellinError> {
        std::fs::File::create(path)?.write_all(&self.to_bytes())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, MellinError> {
        let mut bytes = Vec::new();
        std::fs::File::open(path)?.read_to_end(&mut bytes)?;
        Self::from_bytes(&bytes)
    }
}

/// File name for a grid in a cache directory: a digest of everything the
/// values depend on.
pub fn cache_key(spec: &WhittakerSpec, geometry: &GridGeometry, contours: &Contours, options: &GridOptions) -> String {
    let text = format!("v{VERSION}|{spec:?}|{geometry:?}|{contours:?}|{options:?}");
    let digest = Sha256::digest(text.as_bytes());
    let hex: String = digest.iter().take(12).map(|b| format!("{b:02x}")).collect();
    format!("wgrid-{hex}.bin")
}

/// Load the grid from `dir` if a matching file exists, otherwise build and
/// store it. The flag reports a cache hit.
pub fn cached_grid(
    dir: &Path,
    spec: &WhittakerSpec,
    geometry: &GridGeometry,
    contours: &Contours,
    options: &GridOptions,
) -> Result<(WhittakerGrid, bool), MellinError> {
    let path = dir.join(cache_key(spec, geometry, contours, options));
    if path.exists() {
        if let Ok(g) = WhittakerGrid::load(&path) {
            if g.matches(spec, geometry, contours, options.order) && g.report.passed {
                return Ok((g, true));
            }
        }
    }
    let g = build_grid_with(spec, geometry, contours, options)?;
    std::fs::create_dir_all(dir)?;
    // write then rename, so a concurrent reader never sees a partial file
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    g.save(&tmp)?;
    std::fs::rename(&tmp, &path)?;
    Ok((g, false))
}

fn put_u32(out: &mut Vec<u8>, x: u32) {
    out.extend_from_slice(&x.to_le_bytes());
}

fn put_u64(out: &mut Vec<u8>, x: u64) {
    out.extend_from_slice(&x.to_le_bytes());
}

fn put_i64(out: &mut Vec<u8>, x: i64) {
    out.extend_from_slice(&x.to_le_bytes());
}

fn put_f64(out: &mut Vec<u8>, x: f64) {
    out.extend_from_slice(&x.to_le_bytes());
}

struct Reader<'a> {
    b: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], MellinError> {
        let s = self.b.get(self.pos..self.pos + n).ok_or_else(|| MellinError::CacheFormat("truncated file".into()))?;
        self.pos += n;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8, MellinError> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<u32, MellinError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64, MellinError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn i64(&mut self) -> Result<i64, MellinError> {
        Ok(i64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn f64(&mut self) -> Result<f64, MellinError> {
        Ok(f64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}
