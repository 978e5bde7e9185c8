//! Vertical-line quadrature for ∫_{c−i∞}^{c+i∞} f(s) ds/2πi.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::MellinError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadratureRule {
    Trapezoid,
    GaussLegendrePanels,
}

/// Placement and discretisation of one vertical line Re s = c, |Im s| ≤ T.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContourSpec {
    pub c: f64,
    pub t_max: f64,
    pub nodes: usize,
    pub rule: QuadratureRule,
    /// Minimum distance between the line and any integrand pole.
    pub pole_margin: f64,
    /// Endpoint magnitude allowed, relative to the peak on the line.
    pub tail_tolerance: f64,
}

impl Default for ContourSpec {
    fn default() -> Self {
        Self {
            c: 1.0,
            t_max: 60.0,
            nodes: 2400,
            rule: QuadratureRule::Trapezoid,
            pole_margin: 0.25,
            tail_tolerance: 1e-14,
        }
    }
}

/// A quadrature node t with its weight, already divided by 2π.
#[derive(Clone, Copy, Debug)]
pub struct Node {
    pub t: f64,
    pub weight: f64,
}

impl ContourSpec {
    pub fn with_abscissa(mut self, c: f64) -> Self {
        self.c = c;
        self
    }

    /// Twice the nodes and twice the height: the "oracle precision" run.
    pub fn doubled(mut self) -> Self {
        self.nodes *= 2;
        self.t_max *= 2.0;
        self
    }

    pub fn validate(&self) -> Result<(), MellinError> {
        if !(self.t_max > 0.0) || !self.c.is_finite() {
            return Err(MellinError::InvalidContour(format!("T = {} must be positive", self.t_max)));
        }
        if self.nodes < 4 || self.nodes % 2 != 0 {
            return Err(MellinError::InvalidContour(format!("N = {} must be even and ≥ 4", self.nodes)));
        }
        if self.rule == QuadratureRule::GaussLegendrePanels && panel_order(self.nodes).is_none() {
            return Err(MellinError::InvalidContour(format!("N = {} is not a multiple of a panel order", self.nodes)));
        }
        if !(self.pole_margin > 0.0) {
            return Err(MellinError::InvalidContour("pole margin must be positive".into()));
        }
        Ok(())
    }

    /// Error unless every pole abscissa in `left` lies at least pole_margin
    /// to the left of c and every one in `right` as far to the right.
    pub fn check_poles(&self, left: &[f64], right: &[f64]) -> Result<(), MellinError> {
        for &p in left {
            if self.c - p < self.pole_margin {
                return Err(MellinError::Pinched(format!("pole at {p} within {} of Re s = {}", self.pole_margin, self.c)));
            }
        }
        for &p in right {
            if p - self.c < self.pole_margin {
                return Err(MellinError::Pinched(format!("pole at {p} within {} of Re s = {}", self.pole_margin, self.c)));
            }
        }
        Ok(())
    }

    /// Nodes of the rule with N nodes (or N/2 when `coarse`).
    pub fn nodes(&self, coarse: bool) -> Vec<Node> {
        let n = if coarse { self.nodes / 2 } else { self.nodes };
        let t = self.t_max;
        match self.rule {
            QuadratureRule::Trapezoid => {
                let h = 2.0 * t / n as f64;
                (0..=n)
                    .map(|k| {
                        let end = k == 0 || k == n;
                        Node { t: -t + k as f64 * h, weight: if end { 0.5 * h } else { h } / (2.0 * PI) }
                    })
                    .collect()
            }
            QuadratureRule::GaussLegendrePanels => {
                let p = panel_order(self.nodes).expect("validated");
                let panels = n / p;
                let width = 2.0 * t / panels as f64;
                let (x, w) = gauss_legendre(p);
                let mut out = Vec::with_capacity(n);
                for j in 0..panels {
                    let mid = -t + (j as f64 + 0.5) * width;
                    for (xi, wi) in x.iter().zip(&w) {
                        out.push(Node { t: mid + 0.5 * width * xi, weight: 0.5 * width * wi / (2.0 * PI) });
                    }
                }
                out
            }
        }
    }

    /// Trapezoid node spacing, if this is a trapezoid rule.
    pub fn lattice_step(&self) -> Option<f64> {
        (self.rule == QuadratureRule::Trapezoid).then(|| 2.0 * self.t_max / self.nodes as f64)
    }
}

/// Panel order for Gauss–Legendre: the largest of 16, 8, 4, 2 that divides N
/// and N/2 (so the coarse rule uses the same panels' order).
fn panel_order(n: usize) -> Option<usize> {
    [16, 8, 4, 2].into_iter().find(|p| n % (2 * p) == 0)
}

/// Gauss–Legendre nodes and weights on [−1, 1] by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let legendre = |z: f64| {
        let (mut p0, mut p1) = (1.0, z);
        for k in 2..=n {
            let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
            p0 = p1;
            p1 = p2;
        }
        (p1, n as f64 * (z * p1 - p0) / (z * z - 1.0))
    };
    for i in 0..(n + 1) / 2 {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(z);
            let dz = p / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let dp = legendre(z).1;
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContourValue {
    pub value: Complex64,
    /// tail_bound + richardson.
    pub error: f64,
    pub tail_bound: f64,
    /// |I_N − I_{N/2}|.
    pub richardson: f64,
}

/// ∫ f(c+it) dt/2π over |t| ≤ T with an error estimate.
pub fn contour_integral<F>(f: F, spec: &ContourSpec) -> Result<ContourValue, MellinError>
where
    F: Fn(Complex64) -> Complex64,
{
    spec.validate()?;
    let at = |t: f64| f(Complex64::new(spec.c, t));
    let fine = spec.nodes(false);
    let vals: Vec<Complex64> = fine.iter().map(|n| at(n.t)).collect();
    let value: Complex64 = fine.iter().zip(&vals).map(|(n, v)| v * n.weight).sum();
    let coarse: Complex64 = match spec.rule {
        // the coarse trapezoid nodes are every other fine node
        QuadratureRule::Trapezoid => {
            let h = 2.0 * spec.t_max / spec.nodes as f64;
            let n = vals.len() - 1;
            (0..=n)
                .step_by(2)
                .map(|k| vals[k] * (if k == 0 || k == n { h } else { 2.0 * h } / (2.0 * PI)))
                .sum()
        }
        QuadratureRule::GaussLegendrePanels => spec.nodes(true).iter().map(|n| at(n.t) * n.weight).sum(),
    };
    let peak = vals.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(MellinError::Truncation("integrand is not finite on the line".into()));
    }
    let mut tail_bound = 0.0;
    for sign in [1.0, -1.0] {
        let end = at(sign * spec.t_max).norm();
        if end > spec.tail_tolerance * peak {
            return Err(MellinError::Truncation(format!(
                "|f| = {end:.3e} at t = {}, peak {peak:.3e}",
                sign * spec.t_max
            )));
        }
        // geometric decay fitted over the last unit of height
        let inner = at(sign * (spec.t_max - 1.0)).norm();
        let rate = if end > 0.0 && inner > end { (inner / end).ln() } else { 0.0 };
        tail_bound += if end == 0.0 {
            0.0
        } else if rate > 0.0 {
            end / rate / (2.0 * PI)
        } else {
            end * spec.t_max / (2.0 * PI)
        };
    }
    let richardson = (value - coarse).norm();
    Ok(ContourValue { value, error: tail_bound + richardson, tail_bound, richardson })
}

#[cfg(test)]
mod tests {
    use super::*;
    use archi_gamma::{barnes_first, gamma_r, Scalar};

    fn gr(s: Complex64) -> Complex64 {
        gamma_r(s).unwrap()
    }

    #[test]
    fn secant_integral() {
        // Γ_R(1+s)Γ_R(1−s) = 1/cos(πs/2); on Re s = 0 the integral is 1/π
        let spec = ContourSpec::default().with_abscissa(0.0);
        let one = Complex64::new(1.0, 0.0);
        let r = contour_integral(|s| gr(one + s) * gr(one - s), &spec).unwrap();
        assert!((r.value - 1.0 / PI).norm() < 1e-13, "{r:?}");
        assert!(r.error < 1e-12);
    }

    #[test]
    fn barnes_cross_check() {
        let one = Complex64::new(1.0, 0.0);
        let exact = barnes_first(&Scalar::int(1), &Scalar::int(1), &Scalar::int(1), &Scalar::int(1)).unwrap();
        for rule in [QuadratureRule::Trapezoid, QuadratureRule::GaussLegendrePanels] {
            let spec = ContourSpec { c: 0.0, rule, ..ContourSpec::default() };
            let r = contour_integral(|s| (gr(one + s) * gr(one - s)).powi(2), &spec).unwrap();
            assert!((r.value - exact).norm() < 1e-13 * exact.norm(), "{rule:?}: {r:?} vs {exact}");
        }
    }

    #[test]
    fn zero_integrand() {
        let r = contour_integral(|_| Complex64::new(0.0, 0.0), &ContourSpec::default()).unwrap();
        assert_eq!(r.value, Complex64::new(0.0, 0.0));
        assert_eq!(r.error, 0.0);
    }

    #[test]
    fn doubling_height_stays_within_tail_bound() {
        let one = Complex64::new(1.0, 0.0);
        let f = |s: Complex64| gr(one + s) * gr(one - s) * gr(s + 2.0);
        let short = ContourSpec { c: 0.0, t_max: 8.0, nodes: 320, tail_tolerance: 1e-6, ..ContourSpec::default() };
        let long = ContourSpec { t_max: 16.0, nodes: 640, ..short };
        let a = contour_integral(f, &short).unwrap();
        let b = contour_integral(f, &long).unwrap();
        let diff = (a.value - b.value).norm();
        assert!(diff <= a.tail_bound && diff > 1e-3 * a.tail_bound, "{a:?} {b:?}");
        assert!(a.tail_bound > 0.0);
    }

    #[test]
    fn slow_decay_is_reported() {
        let spec = ContourSpec { t_max: 5.0, nodes: 100, ..ContourSpec::default() };
        let err = contour_integral(|s| gr(s + 1.0), &spec).unwrap_err();
        assert!(matches!(err, MellinError::Truncation(_)));
    }

    #[test]
    fn odd_node_count_rejected() {
        let spec = ContourSpec { nodes: 101, ..ContourSpec::default() };
        assert!(spec.validate().is_err());
        assert!(ContourSpec { t_max: 0.0, ..ContourSpec::default() }.validate().is_err());
    }

    #[test]
    fn gauss_legendre_is_exact_on_polynomials() {
        let (x, w) = gauss_legendre(8);
        let int = |k: i32| x.iter().zip(&w).map(|(x, w)| w * x.powi(k)).sum::<f64>();
        assert!((int(0) - 2.0).abs() < 4e-15);
        assert!((int(14) - 2.0 / 15.0).abs() < 4e-15);
        assert!(int(7).abs() < 1e-15);
    }

    #[test]
    fn poles_too_close_are_rejected() {
        let spec = ContourSpec::default();
        assert!(spec.check_poles(&[0.0, -2.0], &[]).is_ok());
        assert!(matches!(spec.check_poles(&[0.9], &[]), Err(MellinError::Pinched(_))));
        assert!(matches!(spec.check_poles(&[], &[1.1]), Err(MellinError::Pinched(_))));
    }
}
