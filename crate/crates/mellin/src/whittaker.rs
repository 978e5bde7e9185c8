//! Whittaker functions on the diagonal torus.
//!
//! GL(3): for the monomial x̄1^{j1} x̄2^{j2} x̄3^{j3} of V_ℓ,
//!
//!   W(diag(a1a2, a2, 1)) = i^{j1−j3} (a1a2²)^{w/2} ∬ a1^{1−s1} a2^{1−s2}
//!       Γ_C(s1+(ℓ−1)/2) Γ_R(s1+j1) Γ_C(s2+(ℓ−1)/2) Γ_R(s2+j3) / Γ_R(s1+s2+j1+j3)
//!       ds1/2πi ds2/2πi.
//!
//! The integrand splits as G1(s1)·G2(s2)·D(s1+s2). On matching trapezoid
//! lattices D depends only on k+m, so a row of values at fixed a2 costs one
//! Hankel product plus one dot product per a1.

use std::f64::consts::PI;

use archi_exact::{MultiPoly, Qi};
use archi_gamma::{gamma_c, gamma_r};
use archi_rep::so3::{normal_form, spherical_poly};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::contour::ContourSpec;
use crate::MellinError;

/// Terms of the double sum smaller than this fraction of the largest are dropped.
const PRUNE: f64 = 1e-20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gl3Index {
    /// v_{(ℓ;i)}, −ℓ ≤ i ≤ ℓ.
    Spherical(i64),
    /// (j1, j2, j3) with j1+j2+j3 = ℓ.
    Monomial([u32; 3]),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WhittakerSpec {
    Gl3 { ell: u32, w: i64, eps: i8, index: Gl3Index },
    Gl2 { kappa: u32, w: i64, sign: i8 },
}

impl WhittakerSpec {
    pub fn gl3(ell: u32, w: i64, eps: i8, index: Gl3Index) -> Result<Self, MellinError> {
        let s = WhittakerSpec::Gl3 { ell, w, eps, index };
        s.validate()?;
        Ok(s)
    }

    pub fn gl3_monomial(ell: u32, w: i64, eps: i8, j: [u32; 3]) -> Result<Self, MellinError> {
        Self::gl3(ell, w, eps, Gl3Index::Monomial(j))
    }

    pub fn gl2(kappa: u32, w: i64, sign: i8) -> Result<Self, MellinError> {
        let s = WhittakerSpec::Gl2 { kappa, w, sign };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), MellinError> {
        let bad = |m: String| Err(MellinError::InvalidSpec(m));
        match *self {
            WhittakerSpec::Gl3 { ell, w, eps, index } => {
                if ell < 3 || ell % 2 == 0 {
                    return bad(format!("ℓ = {ell} must be odd and at least 3"));
                }
                if w % 2 != 0 {
                    return bad(format!("w = {w} must be even"));
                }
                if eps.abs() != 1 {
                    return bad(format!("ε = {eps} must be ±1"));
                }
                match index {
                    Gl3Index::Spherical(i) if i.unsigned_abs() > ell as u64 => bad(format!("index {i} outside [−{ell}, {ell}]")),
                    Gl3Index::Monomial(j) if j.iter().sum::<u32>() != ell => bad(format!("{j:?} does not sum to {ell}")),
                    _ => Ok(()),
                }
            }
            WhittakerSpec::Gl2 { kappa, w, sign } => {
                if kappa < 2 {
                    return bad(format!("κ = {kappa} must be at least 2"));
                }
                if (w - kappa as i64) % 2 != 0 {
                    return bad(format!("w = {w} and κ = {kappa} must have equal parity"));
                }
                if sign.abs() != 1 {
                    return bad(format!("sign {sign} must be ±1"));
                }
                Ok(())
            }
        }
    }
}

/// The two lines L1 (for s1) and L2 (for s2).
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Contours {
    pub first: ContourSpec,
    pub second: ContourSpec,
}

impl Contours {
    pub fn with_abscissae(c1: f64, c2: f64) -> Self {
        let d = ContourSpec::default();
        Self { first: d.with_abscissa(c1), second: d.with_abscissa(c2) }
    }

    pub fn doubled(self) -> Self {
        Self { first: self.first.doubled(), second: self.second.doubled() }
    }
}

/// Expansion of v_{(ℓ;i)} in monomials, either from the honest polynomial
/// (sgn(i)x1 + √−1x2)^{|i|}x3^{ℓ−|i|} or from its normal form modulo the quadric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpansionPath {
    Direct,
    Reduced,
}

pub fn monomial_expansion(ell: u32, i: i64, path: ExpansionPath) -> Vec<([u32; 3], Qi)> {
    let ring = MultiPoly::ring(&["x1", "x2", "x3"]);
    let p = spherical_poly(&ring, ell, i);
    let p = match path {
        ExpansionPath::Direct => p,
        ExpansionPath::Reduced => normal_form(&p),
    };
    p.terms().map(|(e, c)| ([e[0], e[1], e[2]], c.clone())).collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelDiagnostics {
    /// Largest integrand magnitude on the boundary of the truncated square,
    /// relative to the peak.
    pub tail_ratio: f64,
    /// Nodes kept on each line after pruning, out of `nodes`.
    pub kept: (usize, usize),
    pub nodes: (usize, usize),
}

enum Denominator {
    /// d[k + m] over the full node index ranges.
    Hankel(Vec<Complex64>),
    /// d[k·n2 + m].
    Dense(Vec<Complex64>, usize),
}

/// One monomial W_{(ℓ,w;j)}, with the gamma factors tabulated on the lines.
pub struct MonomialKernel {
    j: [u32; 3],
    w: i64,
    c: (f64, f64),
    t1: Vec<f64>,
    t2: Vec<f64>,
    g1: Vec<Complex64>,
    g2: Vec<Complex64>,
    den: Denominator,
    pub diagnostics: KernelDiagnostics,
}

impl MonomialKernel {
    pub fn new(ell: u32, w: i64, j: [u32; 3], contours: &Contours) -> Result<Self, MellinError> {
        let Contours { first, second } = contours;
        first.validate()?;
        second.validate()?;
        let half = (ell as f64 - 1.0) / 2.0;
        // rightmost poles of Γ_C(s+(ℓ−1)/2)Γ_R(s+j)
        first.check_poles(&[-half.min(j[0] as f64)], &[])?;
        second.check_poles(&[-half.min(j[2] as f64)], &[])?;
        let n1 = first.nodes(false);
        let n2 = second.nodes(false);
        let line = |nodes: &[crate::contour::Node], c: f64, jj: u32| -> Result<Vec<Complex64>, MellinError> {
            nodes
                .iter()
                .map(|n| {
                    let s = Complex64::new(c, n.t);
                    Ok(gamma_c(s + half)? * gamma_r(s + jj as f64)? * n.weight)
                })
                .collect()
        };
        let g1 = line(&n1, first.c, j[0])?;
        let g2 = line(&n2, second.c, j[2])?;
        let shift = first.c + second.c + (j[0] + j[2]) as f64;
        let inv_gr = |t: f64| -> Result<Complex64, MellinError> { Ok(gamma_r(Complex64::new(shift, t))?.inv()) };
        let hankel = match (first.lattice_step(), second.lattice_step()) {
            (Some(h1), Some(h2)) => ((h1 - h2).abs() <= 1e-14 * h1).then_some(h1),
            _ => None,
        };
        let den = match hankel {
            Some(h) => {
                let t0 = n1[0].t + n2[0].t;
                Denominator::Hankel((0..n1.len() + n2.len() - 1).map(|k| inv_gr(t0 + k as f64 * h)).collect::<Result<_, _>>()?)
            }
            None => {
                let mut d = Vec::with_capacity(n1.len() * n2.len());
                for a in &n1 {
                    for b in &n2 {
                        d.push(inv_gr(a.t + b.t)?);
                    }
                }
                Denominator::Dense(d, n2.len())
            }
        };
        let dget = |k: usize, m: usize| match &den {
            Denominator::Hankel(d) => d[k + m],
            Denominator::Dense(d, cols) => d[k * cols + m],
        };
        // magnitudes of the full double sum, for pruning and the tail check
        let a1: Vec<f64> = g1.iter().map(|z| z.norm()).collect();
        let a2: Vec<f64> = g2.iter().map(|z| z.norm()).collect();
        let mut row = vec![0.0f64; g1.len()];
        let mut col = vec![0.0f64; g2.len()];
        for k in 0..g1.len() {
            for m in 0..g2.len() {
                let v = a1[k] * a2[m] * dget(k, m).norm();
                row[k] = row[k].max(v);
                col[m] = col[m].max(v);
            }
        }
        let peak = row.iter().cloned().fold(0.0, f64::max);
        let edge = row[0].max(row[row.len() - 1]).max(col[0]).max(col[col.len() - 1]);
        let tail_ratio = edge / peak;
        let tol = first.tail_tolerance.min(second.tail_tolerance);
        if !(tail_ratio <= tol) {
            return Err(MellinError::Truncation(format!(
                "Whittaker integrand at the truncation boundary is {tail_ratio:.2e} of its peak"
            )));
        }
        let range = |v: &[f64]| {
            let lo = v.iter().position(|&x| x >= PRUNE * peak).unwrap_or(0);
            let hi = v.iter().rposition(|&x| x >= PRUNE * peak).unwrap_or(v.len() - 1);
            (lo, hi + 1)
        };
        let (lo1, hi1) = range(&row);
        let (lo2, hi2) = range(&col);
        let den = match den {
            Denominator::Hankel(d) => Denominator::Hankel(d[lo1 + lo2..hi1 + hi2 - 1].to_vec()),
            Denominator::Dense(d, cols) => {
                let mut out = Vec::with_capacity((hi1 - lo1) * (hi2 - lo2));
                for k in lo1..hi1 {
                    out.extend_from_slice(&d[k * cols + lo2..k * cols + hi2]);
                }
                Denominator::Dense(out, hi2 - lo2)
            }
        };
        Ok(Self {
            j,
            w,
            c: (first.c, second.c),
            t1: n1[lo1..hi1].iter().map(|n| n.t).collect(),
            t2: n2[lo2..hi2].iter().map(|n| n.t).collect(),
            g1: g1[lo1..hi1].to_vec(),
            g2: g2[lo2..hi2].to_vec(),
            den,
            diagnostics: KernelDiagnostics {
                tail_ratio,
                kept: (hi1 - lo1, hi2 - lo2),
                nodes: (n1.len(), n2.len()),
            },
        })
    }

    pub fn index(&self) -> [u32; 3] {
        self.j
    }

    /// Values at a1 = e^{u1[p]} for fixed a2 = e^{u2}.
    fn column(&self, u1: &[f64], u2: f64) -> Vec<Complex64> {
        let b: Vec<Complex64> = self.g2.iter().zip(&self.t2).map(|(g, t)| g * Complex64::from_polar(1.0, -t * u2)).collect();
        let k1 = self.g1.len();
        let h: Vec<Complex64> = (0..k1)
            .map(|k| match &self.den {
                Denominator::Hankel(d) => dot(&d[k..k + b.len()], &b),
                Denominator::Dense(d, cols) => dot(&d[k * cols..(k + 1) * cols], &b),
            })
            .collect();
        let g1h: Vec<Complex64> = self.g1.iter().zip(&h).map(|(g, h)| g * h).collect();
        let phase = Complex64::i().powi(self.j[0] as i32 - self.j[2] as i32);
        u1.iter()
            .map(|&x| {
                let sum: Complex64 = g1h.iter().zip(&self.t1).map(|(v, t)| v * Complex64::from_polar(1.0, -t * x)).sum();
                // a1^{1−c1} a2^{1−c2} (a1 a2²)^{w/2}
                let scale = ((1.0 - self.c.0) * x + (1.0 - self.c.1) * u2 + 0.5 * self.w as f64 * (x + 2.0 * u2)).exp();
                phase * sum * scale
            })
            .collect()
    }

    /// W at (a1, a2) = (e^{u1}, e^{u2}) for all pairs; result indexed [p·|u2| + q].
    pub fn eval_grid(&self, u1: &[f64], u2: &[f64]) -> Vec<Complex64> {
        let cols: Vec<Vec<Complex64>> = u2.par_iter().map(|&y| self.column(u1, y)).collect();
        let mut out = vec![Complex64::new(0.0, 0.0); u1.len() * u2.len()];
        for (q, col) in cols.into_iter().enumerate() {
            for (p, v) in col.into_iter().enumerate() {
                out[p * u2.len() + q] = v;
            }
        }
        out
    }

    pub fn eval(&self, a1: f64, a2: f64) -> Complex64 {
        self.column(&[a1.ln()], a2.ln())[0]
    }
}

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    let (mut re, mut im) = (0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        re += x.re * y.re - x.im * y.im;
        im += x.re * y.im + x.im * y.re;
    }
    Complex64::new(re, im)
}

/// A GL(3) Whittaker function as a combination of monomial kernels.
pub struct WhittakerEvaluator {
    pub spec: WhittakerSpec,
    pub contours: Contours,
    terms: Vec<(Complex64, MonomialKernel)>,
}

impl WhittakerEvaluator {
    pub fn new(spec: &WhittakerSpec, contours: &Contours) -> Result<Self, MellinError> {
        Self::with_path(spec, contours, ExpansionPath::Reduced)
    }

    pub fn with_path(spec: &WhittakerSpec, contours: &Contours, path: ExpansionPath) -> Result<Self, MellinError> {
        spec.validate()?;
        let WhittakerSpec::Gl3 { ell, w, index, .. } = *spec else {
            return Err(MellinError::InvalidSpec("the Mellin–Barnes evaluator is for GL(3)".into()));
        };
        let expansion = match index {
            Gl3Index::Monomial(j) => vec![(j, Qi::one())],
            Gl3Index::Spherical(i) => monomial_expansion(ell, i, path),
        };
        let terms = expansion
            .into_iter()
            .map(|(j, c)| {
                let (re, im) = c.to_f64_pair();
                Ok((Complex64::new(re, im), MonomialKernel::new(ell, w, j, contours)?))
            })
            .collect::<Result<Vec<_>, MellinError>>()?;
        Ok(Self { spec: *spec, contours: *contours, terms })
    }

    pub fn kernels(&self) -> impl Iterator<Item = &MonomialKernel> {
        self.terms.iter().map(|(_, k)| k)
    }

    /// Worst tail ratio over the monomial kernels.
    pub fn tail_ratio(&self) -> f64 {
        self.kernels().map(|k| k.diagnostics.tail_ratio).fold(0.0, f64::max)
    }

    pub fn eval_grid(&self, u1: &[f64], u2: &[f64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); u1.len() * u2.len()];
        for (c, k) in &self.terms {
            for (o, v) in out.iter_mut().zip(k.eval_grid(u1, u2)) {
                *o += c * v;
            }
        }
        out
    }

    pub fn eval(&self, a1: f64, a2: f64) -> Complex64 {
        self.terms.iter().map(|(c, k)| c * k.eval(a1, a2)).sum()
    }
}

fn check_point(a1: f64, a2: f64) -> Result<(), MellinError> {
    if a1 > 0.0 && a2 > 0.0 && a1.is_finite() && a2.is_finite() {
        Ok(())
    } else {
        Err(MellinError::InvalidSpec(format!("torus point ({a1}, {a2}) must be positive")))
    }
}

/// W(diag(a1a2, a2, 1)) with the given contours.
pub fn whittaker_gl3_with(spec: &WhittakerSpec, a1: f64, a2: f64, contours: &Contours) -> Result<Complex64, MellinError> {
    check_point(a1, a2)?;
    Ok(WhittakerEvaluator::new(spec, contours)?.eval(a1, a2))
}

/// W(diag(a1a2, a2, 1)) with the default contours.
pub fn whittaker_gl3(spec: &WhittakerSpec, a1: f64, a2: f64) -> Result<Complex64, MellinError> {
    whittaker_gl3_with(spec, a1, a2, &Contours::default())
}

/// W(diag(a1a2a3, a2a3, a3)): the centre acts through |det|^{w/2}.
pub fn whittaker_gl3_torus(spec: &WhittakerSpec, a1: f64, a2: f64, a3: f64) -> Result<Complex64, MellinError> {
    check_point(a1, a2)?;
    check_point(a3, 1.0)?;
    let WhittakerSpec::Gl3 { w, .. } = *spec else {
        return Err(MellinError::InvalidSpec("GL(3) spec expected".into()));
    };
    Ok(whittaker_gl3(spec, a1, a2)? * a3.powf(1.5 * w as f64))
}

/// W^±(diag(a, 1)) = |a|^{(κ+w)/2} e^{−2π|a|} for ±a > 0, else 0.
pub fn whittaker_gl2(kappa: u32, w: i64, sign: i8, a: f64) -> f64 {
    if a == 0.0 || (a > 0.0) != (sign > 0) {
        return 0.0;
    }
    let x = a.abs();
    x.powf(0.5 * (kappa as f64 + w as f64)) * (-2.0 * PI * x).exp()
}

/// Evaluate a spec at diag(a,1) (GL2) without building anything.
pub fn whittaker_gl2_spec(spec: &WhittakerSpec, a: f64) -> Result<f64, MellinError> {
    match *spec {
        WhittakerSpec::Gl2 { kappa, w, sign } => Ok(whittaker_gl2(kappa, w, sign, a)),
        _ => Err(MellinError::InvalidSpec("GL(2) spec expected".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_closed_form() {
        assert!((whittaker_gl2(3, 1, 1, 1.0) - (-2.0 * PI).exp()).abs() < 1e-18);
        assert_eq!(whittaker_gl2(3, 1, 1, -1.0), 0.0);
        assert!((whittaker_gl2(2, 0, -1, -2.0) - 2.0 * (-4.0 * PI).exp()).abs() < 1e-18);
        assert_eq!(whittaker_gl2(2, 0, -1, 2.0), 0.0);
    }

    #[test]
    fn spec_parity() {
        assert!(WhittakerSpec::gl3(4, 0, 1, Gl3Index::Spherical(0)).is_err());
        assert!(WhittakerSpec::gl3(5, 1, 1, Gl3Index::Spherical(0)).is_err());
        assert!(WhittakerSpec::gl3(5, 0, 1, Gl3Index::Spherical(6)).is_err());
        assert!(WhittakerSpec::gl3(5, 0, 1, Gl3Index::Monomial([3, 0, 1])).is_err());
        assert!(WhittakerSpec::gl3(5, 0, 1, Gl3Index::Monomial([3, 0, 2])).is_ok());
        assert!(WhittakerSpec::gl2(3, 0, 1).is_err());
        assert!(WhittakerSpec::gl2(3, 1, 1).is_ok());
    }

    #[test]
    fn expansion_paths_have_the_same_monomial_degree() {
        for path in [ExpansionPath::Direct, ExpansionPath::Reduced] {
            for (j, _) in monomial_expansion(5, -3, path) {
                assert_eq!(j.iter().sum::<u32>(), 5);
            }
        }
        // normal form keeps x3 to degree ≤ 1
        assert!(monomial_expansion(5, 1, ExpansionPath::Reduced).iter().all(|(j, _)| j[2] <= 1));
    }

    #[test]
    fn abscissa_must_clear_the_poles() {
        let contours = Contours::with_abscissae(-0.9, 1.0);
        let err = MonomialKernel::new(5, 0, [1, 2, 2], &contours).err().unwrap();
        assert!(matches!(err, MellinError::Pinched(_)));
        // j1 = 0 puts a pole at 0
        assert!(MonomialKernel::new(5, 0, [0, 3, 2], &Contours::with_abscissae(0.1, 1.0)).is_err());
        assert!(MonomialKernel::new(5, 0, [3, 0, 2], &Contours::with_abscissae(-0.5, 1.0)).is_ok());
    }
}
