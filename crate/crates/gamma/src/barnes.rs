use num_complex::Complex64;

use crate::expr::{GammaExpr, Scalar};
use crate::GammaError;

/// Γ_R(s+x)Γ_R(−s+y) pinch when x+y ∈ {0, −2, −4, …}: a pole of the
/// left chain then coincides with one of the right chain.
fn check_separable(left: &[&Scalar], right: &[&Scalar]) -> Result<(), GammaError> {
    for x in left {
        for y in right {
            if x.add(y).is_nonpositive_even() {
                return Err(GammaError::PinchedContour(format!(
                    "poles of Γ_R(s+{x}) and Γ_R(−s+{y}) collide"
                )));
            }
        }
    }
    Ok(())
}

/// 2·Γ_R(a+c)Γ_R(a+d)Γ_R(b+c)Γ_R(b+d)/Γ_R(a+b+c+d), as a constant expression.
pub fn barnes_first_expr(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Result<GammaExpr, GammaError> {
    check_separable(&[a, b], &[c, d])?;
    let total = a.add(b).add(c).add(d);
    let e = GammaExpr::scalar(Scalar::int(2))
        .r(a.add(c))
        .r(a.add(d))
        .r(b.add(c))
        .r(b.add(d))
        .with_factor(crate::GammaKind::R, total, -1);
    Ok(e)
}

/// ∫ Γ_R(s+a)Γ_R(s+b)Γ_R(−s+c)Γ_R(−s+d) ds/2πi over a separating path.
pub fn barnes_first(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Result<Complex64, GammaError> {
    barnes_first_expr(a, b, c, d)?.eval(&Scalar::int(0))
}

/// Closed form of ∫ Γ_R(s+a)Γ_R(s+b)Γ_R(s+c)Γ_R(−s+d)Γ_R(−s+e)/Γ_R(s+a+b+c+d+e) ds/2πi.
pub fn barnes_second_expr(
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
    d: &Scalar,
    e: &Scalar,
) -> Result<GammaExpr, GammaError> {
    check_separable(&[a, b, c], &[d, e])?;
    let de = d.add(e);
    let num = GammaExpr::scalar(Scalar::int(2))
        .r(a.add(d))
        .r(a.add(e))
        .r(b.add(d))
        .r(b.add(e))
        .r(c.add(d))
        .r(c.add(e));
    let den = GammaExpr::one().r(b.add(c).add(&de)).r(a.add(c).add(&de)).r(a.add(b).add(&de));
    Ok(num.mul(&den.inverse()?))
}

pub fn barnes_second(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar, e: &Scalar) -> Result<Complex64, GammaError> {
    barnes_second_expr(a, b, c, d, e)?.eval(&Scalar::int(0))
}

/// A straight line Re s = σ separating the poles s = −x−2n (x in `left`)
/// from s = y+2n (y in `right`), if one exists: the midpoint of the gap.
pub fn straight_contour(left: &[Complex64], right: &[Complex64]) -> Option<f64> {
    let lo = left.iter().map(|x| -x.re).fold(f64::NEG_INFINITY, f64::max);
    let hi = right.iter().map(|y| y.re).fold(f64::INFINITY, f64::min);
    (lo < hi).then(|| 0.5 * (lo + hi))
}
