use archi_exact::Qi;
use num_complex::Complex64;

use crate::expr::{GammaExpr, Scalar};
use crate::GammaError;

/// Archimedean L-factors of cohomological representations: Σ of GL3 with
/// weight ℓ (odd, ≥ 3) and Π of GL2 with weight κ ≥ 2, central weights
/// w_Σ, w_Π. The variable is twisted by s ↦ s + (w_Σ + w_Π)/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LFactorSpec {
    /// L(s, Σ × Π) = Γ_C(s+(ℓ+κ)/2−1) Γ_C(s+|ℓ−κ|/2) Γ_C(s+(κ−1)/2)
    RankinSelberg { ell: i64, kappa: i64, w_sigma: i64, w_pi: i64 },
    /// L(s, Σ^∨ × Π^∨), the same factors in the twist s ↦ s − (w_Σ + w_Π)/2.
    RankinSelbergDual { ell: i64, kappa: i64, w_sigma: i64, w_pi: i64 },
    /// L(s, Σ × Σ^∨) = Γ_R(s) Γ_C(s) Γ_C(s+ℓ−1) Γ_C(s+(ℓ−1)/2)²
    Adjoint { ell: i64 },
    /// L(s, Π) = Γ_C(s+(κ−1)/2), twisted by w_Π/2.
    StandardGl2 { kappa: i64, w_pi: i64 },
}

impl LFactorSpec {
    pub fn expr(&self) -> GammaExpr {
        let half = |n: i64| Scalar::Exact(Qi::from_ratio(n, 2));
        match *self {
            LFactorSpec::RankinSelberg { ell, kappa, w_sigma, w_pi }
            | LFactorSpec::RankinSelbergDual { ell, kappa, w_sigma, w_pi } => {
                let twist = if matches!(self, LFactorSpec::RankinSelberg { .. }) {
                    w_sigma + w_pi
                } else {
                    -(w_sigma + w_pi)
                };
                GammaExpr::one()
                    .c(half(ell + kappa - 2 + twist))
                    .c(half((ell - kappa).abs() + twist))
                    .c(half(kappa - 1 + twist))
            }
            LFactorSpec::Adjoint { ell } => GammaExpr::one()
                .r(Scalar::int(0))
                .c(Scalar::int(0))
                .c(Scalar::int(ell - 1))
                .with_factor(crate::GammaKind::C, half(ell - 1), 2),
            LFactorSpec::StandardGl2 { kappa, w_pi } => GammaExpr::one().c(half(kappa - 1 + w_pi)),
        }
    }
}

pub fn l_factor(spec: &LFactorSpec, s: &Scalar) -> Result<Complex64, GammaError> {
    spec.expr().eval(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lanczos::{gamma_c, gamma_r};
    use crate::rational::gamma_rational_part;
    use archi_exact::BigRational;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn rs_example() {
        let spec = LFactorSpec::RankinSelberg { ell: 5, kappa: 3, w_sigma: 0, w_pi: 0 };
        let v = l_factor(&spec, &Scalar::ratio(3, 2)).unwrap();
        let g = |x: f64| gamma_c(c(x)).unwrap();
        // (ℓ+κ)/2 − 1 = 3 puts the first factor at 9/2
        let expect = g(4.5) * g(2.5) * g(2.5);
        assert!((v - expect).norm() < 1e-14 * expect.norm());
    }

    #[test]
    fn adjoint_example() {
        let spec = LFactorSpec::Adjoint { ell: 5 };
        let v = l_factor(&spec, &Scalar::int(1)).unwrap();
        let g = |x: f64| gamma_c(c(x)).unwrap();
        let expect = gamma_r(c(1.0)).unwrap() * g(1.0) * g(5.0) * g(3.0) * g(3.0);
        assert!((v - expect).norm() < 1e-14 * expect.norm());
    }

    #[test]
    fn adjoint_pi_power() {
        let one = BigRational::from_integer(1.into());
        for ell in [3i64, 5, 7] {
            let l = LFactorSpec::Adjoint { ell }.expr();
            let r = gamma_rational_part(&l, &one).unwrap();
            assert!(r.is_rational_times_integral_pi_power());
            assert_eq!(r.pi_exponent_twice, -2 * (2 * ell + 2));
            // with −4 Γ_C(ℓ+1) / (Γ_C(1) Γ_R(2ℓ+3)) in front the power drops to π^{−2ℓ−1}
            let front = GammaExpr::scalar(Scalar::int(-4))
                .c(Scalar::int(ell))
                .with_factor(crate::GammaKind::C, Scalar::int(0), -1)
                .with_factor(crate::GammaKind::R, Scalar::int(2 * ell + 2), -1);
            let b = gamma_rational_part(&front.mul(&l), &one).unwrap();
            assert!(b.is_rational_times_integral_pi_power());
            assert_eq!(b.pi_exponent_twice, -2 * (2 * ell + 1));
        }
    }
}
