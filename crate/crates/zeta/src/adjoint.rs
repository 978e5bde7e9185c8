//! The adjoint pairing ⟨W, W⟩ = ∬ a1^{−1} W_{(ℓ;0)}(diag(a1a2, a2, 1))² d×a1 d×a2
//! for central weight 0, against its gamma closed form.

use archi_exact::BigRational;
use archi_gamma::{gamma_rational_part, l_factor, GammaExpr, GammaKind, LFactorSpec, RationalPart, Scalar};
use archi_mellin::WhittakerSpec;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::quad::{QuadConfig, QuadDiagnostics, TorusGrid};
use crate::report::{Cx, Report, Verdict};
use crate::ZetaError;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AdjointReport {
    pub ell: u32,
    pub numeric: Cx,
    /// −4 Γ_R(1)Γ_C(ℓ)Γ_C(ℓ+1)Γ_C((ℓ+1)/2)² / Γ_R(2ℓ+3).
    pub target: Cx,
    /// −4 Γ_C(ℓ+1)/(Γ_C(1)Γ_R(2ℓ+3)) · L(1, Σ×Σ^∨), which must equal `target`.
    pub target_via_l: Cx,
    pub abs_deviation: f64,
    pub rel_deviation: f64,
    /// target = coefficient · π^{pi_exponent}.
    pub target_coefficient: String,
    pub target_pi_exponent: i64,
    pub diagnostics: QuadDiagnostics,
}

impl AdjointReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.rel_deviation <= tol
    }

    pub fn to_report(&self, tol: f64) -> Report {
        Report::new(
            "adjoint_pairing",
            json!({ "ell": self.ell, "w": 0, "tolerance": tol }),
            self.numeric.into(),
            self.target.into(),
            Verdict::check(self.passes(tol)),
            json!({ "target_via_l": self.target_via_l, "target_coefficient": self.target_coefficient,
                    "target_pi_exponent": self.target_pi_exponent, "quadrature": self.diagnostics }),
        )
    }
}

/// The closed form as a constant gamma expression (evaluate at s = 0).
pub fn adjoint_target(ell: u32) -> GammaExpr {
    let l = ell as i64;
    GammaExpr::one()
        .r(Scalar::int(1))
        .c(Scalar::int(l))
        .c(Scalar::int(l + 1))
        .with_factor(GammaKind::C, Scalar::int((l + 1) / 2), 2)
        .with_factor(GammaKind::R, Scalar::int(2 * l + 3), -1)
        .times(&Scalar::int(-4))
}

pub(crate) fn adjoint_target_exact(ell: u32) -> Result<RationalPart, ZetaError> {
    Ok(gamma_rational_part(&adjoint_target(ell), &BigRational::from_integer(0.into()))?)
}

fn validate(ell: u32) -> Result<(), ZetaError> {
    if ell < 3 || ell % 2 == 0 {
        return Err(ZetaError::InvalidParams(format!("ℓ must be odd and at least 3, got {ell}")));
    }
    Ok(())
}

pub fn adjoint_pairing(ell: u32, config: &QuadConfig) -> Result<AdjointReport, ZetaError> {
    validate(ell)?;
    config.validate()?;
    // W_{(ℓ;0)} is the Whittaker function of x3^ℓ
    let j = [0, 0, ell];
    // near 0, W ~ a1 and W ~ a2^{(ℓ+1)/2}
    let p_low = (1.0, ell as f64 + 1.0);
    let spec = WhittakerSpec::gl3_monomial(ell, 0, 1, j)?;
    let grid = TorusGrid::build(config, &spec, config.window(p_low.0)?, config.window(p_low.1)?)?;
    let sum = grid.integrate(p_low, |u1, _, w| w * w * (-u1).exp());

    let exact = adjoint_target_exact(ell)?;
    let (re, im) = exact.to_f64();
    let target = Complex64::new(re, im);
    let l = ell as i64;
    let prefactor = GammaExpr::one()
        .c(Scalar::int(l + 1))
        .with_factor(GammaKind::C, Scalar::int(1), -1)
        .with_factor(GammaKind::R, Scalar::int(2 * l + 3), -1)
        .times(&Scalar::int(-4))
        .eval(&Scalar::int(0))?;
    let target_via_l = prefactor * l_factor(&LFactorSpec::Adjoint { ell: l }, &Scalar::int(1))?;
    let numeric = sum.value;
    Ok(AdjointReport {
        ell,
        numeric: numeric.into(),
        target: target.into(),
        target_via_l: target_via_l.into(),
        abs_deviation: (numeric - target).norm(),
        rel_deviation: (numeric - target).norm() / target.norm(),
        target_coefficient: exact.coefficient.to_string(),
        target_pi_exponent: exact.pi_exponent_twice / 2,
        diagnostics: QuadDiagnostics::new(config, &[&grid], &sum),
    })
}
