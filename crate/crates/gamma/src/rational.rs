use archi_exact::{BigInt, BigRational, Qi};
use num_traits::{One, Signed, Zero};

use crate::expr::{GammaExpr, GammaKind, Scalar};
use crate::GammaError;

/// value = coefficient · π^{pi_exponent_twice/2} · (√2 if sqrt2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPart {
    pub coefficient: Qi,
    pub pi_exponent_twice: i64,
    pub sqrt2: bool,
}

impl RationalPart {
    /// The π-exponent as a rational (half-integers carry the √π).
    pub fn pi_exponent(&self) -> BigRational {
        BigRational::new(self.pi_exponent_twice.into(), 2.into())
    }

    /// Whether a bare √π survives.
    pub fn sqrt_pi_parity(&self) -> bool {
        self.pi_exponent_twice.rem_euclid(2) == 1
    }

    /// Whether value = rational · π^k with integer k.
    pub fn is_rational_times_integral_pi_power(&self) -> bool {
        !self.sqrt2 && !self.sqrt_pi_parity() && self.coefficient.is_real()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        let (re, im) = self.coefficient.to_f64_pair();
        let mut s = std::f64::consts::PI.powf(self.pi_exponent_twice as f64 / 2.0);
        if self.sqrt2 {
            s *= std::f64::consts::SQRT_2;
        }
        (re * s, im * s)
    }
}

/// Γ(y) = c · π^{t/2} for y ∈ ½Z not a nonpositive integer, by exact recursion
/// from Γ(1) = 1 or Γ(1/2) = √π.
fn gamma_half_integer(y: &BigRational) -> Result<(BigRational, i64), GammaError> {
    let two_y = y * BigRational::from_integer(2.into());
    if !two_y.is_integer() {
        return Err(GammaError::NotClosedForm(format!("Γ({y})")));
    }
    let (base, pi_twice) = if y.is_integer() {
        if !y.is_positive() {
            return Err(GammaError::Pole(format!("Γ({y})")));
        }
        (BigRational::one(), 0)
    } else {
        (BigRational::new(1.into(), 2.into()), 1)
    };
    let one = BigRational::one();
    let mut c = BigRational::one();
    let mut k = base.clone();
    if *y >= base {
        while k < *y {
            c *= &k;
            k += &one;
        }
    } else {
        let mut k = y.clone();
        while k < base {
            c /= &k;
            k += &one;
        }
    }
    Ok((c, pi_twice))
}

/// Exact value of `expr` at the rational point s, provided every Γ argument
/// lands in ½Z.
pub fn gamma_rational_part(expr: &GammaExpr, s: &BigRational) -> Result<RationalPart, GammaError> {
    let mut coefficient = match &expr.prefactor {
        Scalar::Exact(q) => q.clone(),
        Scalar::Numeric(z) => return Err(GammaError::NotClosedForm(format!("numeric prefactor {z}"))),
    };
    let mut pi_twice = 0i64;
    let mut two_twice = 0i64;
    let half = BigRational::new(1.into(), 2.into());
    for f in &expr.factors {
        let x = f
            .shift
            .as_exact_rational()
            .map(|a| a + s)
            .ok_or_else(|| GammaError::NotClosedForm(format!("shift {}", f.shift)))?;
        let e = f.exponent as i64;
        let (y, pi_x, two_x) = match f.kind {
            // Γ_R(x) = π^{−x/2} Γ(x/2)
            GammaKind::R => (&x * &half, -x.clone(), BigRational::zero()),
            // Γ_C(x) = 2^{1−x} π^{−x} Γ(x)
            GammaKind::C => (x.clone(), -(&x * BigRational::from_integer(2.into())), {
                (BigRational::one() - &x) * BigRational::from_integer(2.into())
            }),
        };
        if !pi_x.is_integer() || !two_x.is_integer() {
            return Err(GammaError::NotClosedForm(format!("argument {x}")));
        }
        let (c, pt) = gamma_half_integer(&y)?;
        let to_i64 = |r: &BigRational| -> i64 { r.to_integer().try_into().expect("exponent fits i64") };
        pi_twice += e * (to_i64(&pi_x) + pt);
        two_twice += e * to_i64(&two_x);
        let c = if e >= 0 { c.pow(e as i32) } else { c.recip().pow((-e) as i32) };
        coefficient = coefficient.scale(&c);
    }
    let whole = two_twice.div_euclid(2);
    let two = BigRational::from_integer(BigInt::from(2));
    coefficient = coefficient.scale(&two.pow(whole as i32));
    Ok(RationalPart { coefficient, pi_exponent_twice: pi_twice, sqrt2: two_twice.rem_euclid(2) == 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use archi_exact::rat;

    fn at(e: &GammaExpr, s: i64) -> RationalPart {
        gamma_rational_part(e, &BigRational::from_integer(s.into())).unwrap()
    }

    #[test]
    fn trivial_parts() {
        let r = at(&GammaExpr::one().r(Scalar::int(0)), 2);
        assert_eq!((r.coefficient, r.pi_exponent_twice), (Qi::one(), -2));
        let c = at(&GammaExpr::one().c(Scalar::int(0)), 3);
        assert_eq!((c.coefficient, c.pi_exponent_twice, c.sqrt2), (Qi::from_ratio(1, 2), -6, false));
    }

    #[test]
    fn gamma_r_13() {
        // Γ(13/2) = (10395/64)√π, so Γ_R(13) = (10395/64) π^{−6}
        let r = at(&GammaExpr::one().r(Scalar::int(0)), 13);
        assert_eq!(r.coefficient, Qi::from_ratio(10395, 64));
        assert_eq!(r.pi_exponent_twice, -12);
        assert!(r.is_rational_times_integral_pi_power());
    }

    #[test]
    fn negative_half_integers_and_poles() {
        assert_eq!(gamma_half_integer(&rat(-1, 2)).unwrap(), (rat(-2, 1), 1));
        assert_eq!(gamma_half_integer(&rat(-3, 2)).unwrap(), (rat(4, 3), 1));
        assert!(matches!(gamma_half_integer(&rat(-2, 1)), Err(GammaError::Pole(_))));
        assert!(matches!(gamma_half_integer(&rat(1, 3)), Err(GammaError::NotClosedForm(_))));
    }

    #[test]
    fn matches_numeric() {
        let e = GammaExpr::one().c(Scalar::ratio(5, 2)).r(Scalar::ratio(1, 2)).with_factor(GammaKind::C, Scalar::int(0), -2);
        let s = rat(3, 2);
        let r = gamma_rational_part(&e, &s).unwrap();
        let v = e.eval(&Scalar::Exact(Qi::from_rational(s))).unwrap();
        let (re, im) = r.to_f64();
        assert!((v.re - re).abs() < 1e-13 * v.norm() && im == 0.0);
    }
}
