use std::f64::consts::PI;

use num_complex::Complex64;

use crate::GammaError;

// Godfrey's g = 607/128, 15-term coefficients (as tabulated in Numerical
// Recipes, 3rd ed., gammln). Checked against 40-digit mpmath values in
// tests/oracle.rs.
const G: f64 = 607.0 / 128.0;
const COEF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_78;

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// ln Γ(z) for Re z ≥ 1/2, on the branch continuous from the positive axis.
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let mut ser = Complex64::new(COEF[0], 0.0);
    for (k, c) in COEF.iter().enumerate().skip(1) {
        ser += c / (z + k as f64);
    }
    let t = z + G + 0.5;
    (z + 0.5) * t.ln() - t + LN_SQRT_2PI + (ser / z).ln()
}

/// sin(πz) with the real part reduced exactly, so zeros at integers are exact.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let r = z.re - 2.0 * (z.re / 2.0).round();
    // r in [-1, 1]; fold to [-1/2, 1/2] where sin(πr) is well conditioned
    let (s, c) = if r > 0.5 {
        let u = 1.0 - r;
        ((PI * u).sin(), -(PI * u).cos())
    } else if r < -0.5 {
        let u = -1.0 - r;
        ((PI * u).sin(), -(PI * u).cos())
    } else {
        ((PI * r).sin(), (PI * r).cos())
    };
    let y = PI * z.im;
    Complex64::new(s * y.cosh(), c * y.sinh())
}

/// ln Γ(z). Off the right half-plane this is log(π / (sin(πz) Γ(1−z))), a
/// logarithm of Γ but not necessarily the principal branch of ln Γ.
pub fn ln_gamma(z: Complex64) -> Result<Complex64, GammaError> {
    if is_pole(z) {
        return Err(GammaError::Pole(format!("{z}")));
    }
    if z.re >= 0.5 {
        return Ok(ln_gamma_right(z));
    }
    Ok(Complex64::new(PI.ln(), 0.0) - sin_pi(z).ln() - ln_gamma_right(1.0 - z))
}

/// Γ(z) for complex z, with reflection for Re z < 1/2.
pub fn gamma_complex(z: Complex64) -> Result<Complex64, GammaError> {
    if is_pole(z) {
        return Err(GammaError::Pole(format!("{z}")));
    }
    let v = if z.re >= 0.5 {
        ln_gamma_right(z).exp()
    } else {
        let w = 1.0 - z;
        PI / (sin_pi(z) * ln_gamma_right(w).exp())
    };
    if !v.re.is_finite() || !v.im.is_finite() {
        return Err(GammaError::Overflow(format!("{z}")));
    }
    Ok(v)
}

/// Γ_R(s) = π^{−s/2} Γ(s/2).
pub fn gamma_r(s: Complex64) -> Result<Complex64, GammaError> {
    let g = gamma_complex(s / 2.0)?;
    Ok(g * (-(s / 2.0) * PI.ln()).exp())
}

/// Γ_C(s) = 2 (2π)^{−s} Γ(s).
pub fn gamma_c(s: Complex64) -> Result<Complex64, GammaError> {
    let g = gamma_complex(s)?;
    Ok(2.0 * g * (-s * (2.0 * PI).ln()).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn trivial_values() {
        assert!((gamma_complex(c(1.0)).unwrap() - 1.0).norm() < 1e-15);
        assert!((gamma_complex(c(0.5)).unwrap() - PI.sqrt()).norm() < 1e-15);
        assert!((gamma_r(c(1.0)).unwrap() - 1.0).norm() < 1e-14);
        assert!((gamma_c(c(1.0)).unwrap() - 1.0 / PI).norm() < 1e-15);
        assert!((gamma_c(c(2.0)).unwrap() - 1.0 / (2.0 * PI * PI)).norm() < 1e-15);
    }

    #[test]
    fn poles_are_signaled() {
        for k in 0..5 {
            assert!(matches!(gamma_complex(c(-(k as f64))), Err(GammaError::Pole(_))));
        }
        assert!(matches!(gamma_complex(c(200.0)), Err(GammaError::Overflow(_))));
        assert!(gamma_complex(Complex64::new(-3.0, 1e-9)).is_ok());
    }

    #[test]
    fn sin_pi_exact_zeros() {
        for k in -6..6 {
            assert_eq!(sin_pi(c(k as f64)).re, 0.0);
        }
    }
}
