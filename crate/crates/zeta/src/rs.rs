//! The GL(3)×GL(2) zeta integral Z(s, W_{(ℓ;κ)}, W⁻) on the torus.
//!
//! With g = diag(a1a2, a2)·k the integral reduces to
//!
//!   Σ_i (√−1)^{κ−i} C(κ,i) ∬ a1^{s+(κ−3)/2} a2^{2s−1} e^{−2πa1}
//!       W_{(i, κ−i, ℓ−κ)}(diag(a1a2, a2, 1)) d×a1 d×a2,
//!
//! the monomials being those of v_κ = (x1 + √−1x2)^κ x3^{ℓ−κ}. Central
//! weights multiply the integrand by (a1a2²)^{(w_Σ+w_Π)/2}, which the GL(3)
//! grid carries for w_Σ and the weight below carries for w_Π.

use std::collections::BTreeMap;

use archi_exact::Qi;
use archi_gamma::{l_factor, LFactorSpec, Scalar};
use archi_mellin::{monomial_expansion, ExpansionPath, WhittakerSpec};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::quad::{QuadConfig, QuadDiagnostics, TorusGrid, TorusSum};
use crate::report::{Cx, Report, Verdict};
use crate::ZetaError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RsParams {
    pub ell: u32,
    pub kappa: u32,
    pub w_sigma: i64,
    pub w_pi: i64,
}

impl RsParams {
    /// w_Σ = 0 and w_Π = κ mod 2.
    pub fn new(ell: u32, kappa: u32) -> Self {
        Self { ell, kappa, w_sigma: 0, w_pi: (kappa % 2) as i64 }
    }

    pub fn validate(&self) -> Result<(), ZetaError> {
        let RsParams { ell, kappa, w_sigma, w_pi } = *self;
        let bad = |why: &str| Err(ZetaError::InvalidParams(format!("{why}: {self:?}")));
        if ell < 3 || ell % 2 == 0 {
            return bad("ℓ must be odd and at least 3");
        }
        if kappa < 2 || kappa > ell {
            return bad("need ℓ ≥ κ ≥ 2");
        }
        if w_sigma.rem_euclid(2) != 0 || (w_pi - kappa as i64).rem_euclid(2) != 0 {
            return bad("need w_Σ even and w_Π ≡ κ mod 2");
        }
        Ok(())
    }

    pub fn l_spec(&self) -> LFactorSpec {
        LFactorSpec::RankinSelberg {
            ell: self.ell as i64,
            kappa: self.kappa as i64,
            w_sigma: self.w_sigma,
            w_pi: self.w_pi,
        }
    }

    /// s + (w_Σ + w_Π)/2.
    pub fn s_eff(&self, s: f64) -> f64 {
        s + (self.w_sigma + self.w_pi) as f64 / 2.0
    }

    /// Small-a exponents of the torus integrand, minimised over the monomials.
    pub fn low_exponents(&self, s: f64) -> (f64, f64) {
        let (l, k) = (self.ell as f64, self.kappa as f64);
        let se = self.s_eff(s);
        (se + (k - 1.0) / 2.0, 2.0 * se + (l - k).min((l - 1.0) / 2.0))
    }

    /// (√−1)^{2κ−ℓ}.
    pub fn claimed_ratio(&self) -> Complex64 {
        Complex64::i().powi(2 * self.kappa as i32 - self.ell as i32)
    }
}

fn qi(z: &Qi) -> Complex64 {
    let (re, im) = z.to_f64_pair();
    Complex64::new(re, im)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetryCheck {
    /// Z(s, W_{(ℓ;−κ)}, W⁺).
    pub z_variant: Cx,
    /// (−1)^{w_Σ/2} ε.
    pub sign: i8,
    /// |Z − sign·Z_variant| / |Z|.
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RsZetaReport {
    pub params: RsParams,
    pub eps: i8,
    pub s: f64,
    pub z: Cx,
    pub l: Cx,
    pub ratio: Cx,
    pub claimed_ratio: Cx,
    pub abs_deviation: f64,
    pub rel_deviation: f64,
    pub symmetry: SymmetryCheck,
    pub diagnostics: QuadDiagnostics,
}

impl RsZetaReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.rel_deviation <= tol && self.symmetry.deviation <= tol
    }

    pub fn to_report(&self, tol: f64) -> Report {
        let target = Complex64::from(self.claimed_ratio) * Complex64::from(self.l);
        Report::new(
            "rs_zeta",
            json!({
                "ell": self.params.ell, "kappa": self.params.kappa,
                "w_sigma": self.params.w_sigma, "w_pi": self.params.w_pi,
                "epsilon": self.eps, "s": self.s, "tolerance": tol,
            }),
            self.z.into(),
            target,
            Verdict::check(self.passes(tol)),
            json!({ "l": self.l, "ratio": self.ratio, "claimed_ratio": self.claimed_ratio,
                    "symmetry": self.symmetry, "quadrature": self.diagnostics }),
        )
    }
}

/// Grids for every monomial of v_κ, reusable for any s ≥ `s_min`.
pub struct RsZetaEngine {
    pub params: RsParams,
    pub config: QuadConfig,
    s_min: f64,
    grids: BTreeMap<[u32; 3], TorusGrid>,
}

impl RsZetaEngine {
    pub fn new(params: RsParams, s_min: f64, config: &QuadConfig) -> Result<Self, ZetaError> {
        params.validate()?;
        config.validate()?;
        let (p1, p2) = params.low_exponents(s_min);
        let (u1, u2) = (config.window(p1)?, config.window(p2)?);
        let mut grids = BTreeMap::new();
        for (j, _) in monomial_expansion(params.ell, params.kappa as i64, ExpansionPath::Direct) {
            let spec = WhittakerSpec::gl3_monomial(params.ell, params.w_sigma, 1, j)?;
            grids.insert(j, TorusGrid::build(config, &spec, u1, u2)?);
        }
        Ok(Self { params, config: config.clone(), s_min, grids })
    }

    pub fn grids(&self) -> impl Iterator<Item = &TorusGrid> {
        self.grids.values()
    }

    pub fn cache_hits(&self) -> usize {
        self.grids.values().map(|g| g.cache_hits).sum()
    }

    /// ∬ a1^{s−3/2+κ/2+w_Π/2} a2^{2s−1+w_Π} e^{−2πa1} W_j d×a1 d×a2.
    pub fn torus_integral(&self, j: [u32; 3], s: f64) -> Result<TorusSum, ZetaError> {
        if s < self.s_min - 1e-12 {
            return Err(ZetaError::InvalidParams(format!("s = {s} below the engine's s_min = {}", self.s_min)));
        }
        let grid = self.grids.get(&j).ok_or_else(|| ZetaError::InvalidParams(format!("no grid for monomial {j:?}")))?;
        let RsParams { ell, kappa, w_pi, w_sigma } = self.params;
        let alpha1 = s - 1.5 + kappa as f64 / 2.0 + w_pi as f64 / 2.0;
        let alpha2 = 2.0 * s - 1.0 + w_pi as f64;
        let half = (ell as f64 - 1.0) / 2.0;
        let se = s + (w_sigma + w_pi) as f64 / 2.0;
        let p_low = (se + (kappa as f64 - 1.0) / 2.0 + half.min(j[0] as f64), 2.0 * se + half.min(j[2] as f64));
        Ok(grid.integrate(p_low, |u1, u2, w| w * (alpha1 * u1 - 2.0 * std::f64::consts::PI * u1.exp() + alpha2 * u2).exp()))
    }

    fn combination(&self, coeffs: &[([u32; 3], Qi)], s: f64) -> Result<TorusSum, ZetaError> {
        let sums = coeffs
            .iter()
            .map(|(j, c)| Ok((qi(c), self.torus_integral(*j, s)?)))
            .collect::<Result<Vec<_>, ZetaError>>()?;
        Ok(TorusSum::combine(sums.iter().map(|(c, t)| (*c, t))))
    }

    /// Z(s, W_{(ℓ;κ)}, W⁻) and the variant Z(s, W_{(ℓ;−κ)}, W⁺).
    pub fn zeta(&self, s: f64, eps: i8) -> Result<RsZetaReport, ZetaError> {
        if eps != 1 && eps != -1 {
            return Err(ZetaError::InvalidParams(format!("ε must be ±1, got {eps}")));
        }
        let RsParams { ell, kappa, w_sigma, .. } = self.params;
        let main = self.combination(&monomial_expansion(ell, kappa as i64, ExpansionPath::Direct), s)?;

        // Z(W_{−κ}, W⁺) integrates W_{−κ}(ι(t)·diag(−1,1,1)) against W⁺(t).
        // Writing diag(−1,1,1) = (−1₃)·k with k = diag(1,−1,−1) ∈ SO(3), this is
        // the central sign (−1)^{1+w_Σ/2}ε times the Whittaker function of
        // ρ(k)v_{−κ}, whose monomials are those of v_{−κ} with signs (−1)^{j2+j3}.
        let flipped: Vec<([u32; 3], Qi)> = monomial_expansion(ell, -(kappa as i64), ExpansionPath::Direct)
            .into_iter()
            .map(|(j, c)| (j, &c * &Qi::sign_pow((j[1] + j[2]) as i64)))
            .collect();
        let central = Qi::sign_pow(1 + w_sigma / 2) * Qi::from_int(eps as i64);
        let variant = self.combination(&flipped, s)?.value * qi(&central);
        let sign = (if (w_sigma / 2) % 2 == 0 { 1 } else { -1 }) * eps;

        let l = l_factor(&self.params.l_spec(), &Scalar::Numeric(Complex64::new(s, 0.0)))?;
        let claimed = self.params.claimed_ratio();
        let z = main.value;
        let ratio = z / l;
        let grids: Vec<&TorusGrid> = self.grids.values().collect();
        Ok(RsZetaReport {
            params: self.params,
            eps,
            s,
            z: z.into(),
            l: l.into(),
            ratio: ratio.into(),
            claimed_ratio: claimed.into(),
            abs_deviation: (z - claimed * l).norm(),
            rel_deviation: (ratio - claimed).norm(),
            symmetry: SymmetryCheck {
                z_variant: variant.into(),
                sign,
                deviation: (z - variant * sign as f64).norm() / z.norm(),
            },
            diagnostics: QuadDiagnostics::new(&self.config, &grids, &main),
        })
    }
}

pub fn rs_zeta(params: RsParams, eps: i8, s: f64, config: &QuadConfig) -> Result<RsZetaReport, ZetaError> {
    RsZetaEngine::new(params, s, config)?.zeta(s, eps)
}
