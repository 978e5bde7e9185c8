use std::fmt;

use archi_exact::{BigRational, Qi};
use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::lanczos::{gamma_c, gamma_r};
use crate::GammaError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GammaKind {
    /// Γ_R(s) = π^{−s/2} Γ(s/2)
    R,
    /// Γ_C(s) = 2 (2π)^{−s} Γ(s)
    C,
}

/// A shift or prefactor: exact in Q(i) when known exactly, otherwise a float.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(Qi),
    Numeric(Complex64),
}

impl Scalar {
    pub fn int(n: i64) -> Self {
        Scalar::Exact(Qi::from_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Exact(Qi::from_ratio(n, d))
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(q) => {
                let (re, im) = q.to_f64_pair();
                Complex64::new(re, im)
            }
            Scalar::Numeric(z) => *z,
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a + b),
            _ => Scalar::Numeric(self.to_complex() + o.to_complex()),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(-a),
            Scalar::Numeric(z) => Scalar::Numeric(-z),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a * b),
            _ => Scalar::Numeric(self.to_complex() * o.to_complex()),
        }
    }

    /// Whether this is a nonpositive integer. Exact values are tested
    /// exactly; floats are tested on their exact binary value.
    pub fn is_nonpositive_integer(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.im.is_zero() && q.re.is_integer() && !q.re.is_positive(),
            Scalar::Numeric(z) => z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0,
        }
    }

    /// Whether this is a nonpositive even integer (a pole of Γ_R).
    pub fn is_nonpositive_even(&self) -> bool {
        self.mul(&Scalar::ratio(1, 2)).is_nonpositive_integer()
    }

    pub fn as_exact_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Exact(q) if q.im.is_zero() => Some(q.re.clone()),
            _ => None,
        }
    }
}

impl From<Complex64> for Scalar {
    fn from(z: Complex64) -> Self {
        Scalar::Numeric(z)
    }
}

impl From<Qi> for Scalar {
    fn from(q: Qi) -> Self {
        Scalar::Exact(q)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => write!(f, "{q}"),
            Scalar::Numeric(z) => write!(f, "{z}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GammaFactor {
    pub kind: GammaKind,
    pub shift: Scalar,
    pub exponent: i32,
}

impl GammaFactor {
    /// Argument of the underlying Γ at s: s+shift for Γ_C, (s+shift)/2 for Γ_R.
    fn gamma_argument(&self, s: &Scalar) -> Scalar {
        let x = s.add(&self.shift);
        match self.kind {
            GammaKind::C => x,
            GammaKind::R => x.mul(&Scalar::ratio(1, 2)),
        }
    }

    fn eval(&self, s: Complex64) -> Result<Complex64, GammaError> {
        let x = s + self.shift.to_complex();
        let v = match self.kind {
            GammaKind::R => gamma_r(x)?,
            GammaKind::C => gamma_c(x)?,
        };
        Ok(v.powi(self.exponent))
    }
}

/// prefactor · ∏ Γ_R(s+a)^e · Γ_C(s+b)^{e'} as a function of s.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaExpr {
    pub factors: Vec<GammaFactor>,
    pub prefactor: Scalar,
}

impl Default for GammaExpr {
    fn default() -> Self {
        Self::one()
    }
}

impl GammaExpr {
    pub fn one() -> Self {
        Self { factors: Vec::new(), prefactor: Scalar::int(1) }
    }

    pub fn scalar(c: Scalar) -> Self {
        Self { factors: Vec::new(), prefactor: c }
    }

    pub fn with_factor(mut self, kind: GammaKind, shift: impl Into<Scalar>, exponent: i32) -> Self {
        if exponent != 0 {
            self.factors.push(GammaFactor { kind, shift: shift.into(), exponent });
        }
        self
    }

    pub fn r(self, shift: impl Into<Scalar>) -> Self {
        self.with_factor(GammaKind::R, shift, 1)
    }

    pub fn c(self, shift: impl Into<Scalar>) -> Self {
        self.with_factor(GammaKind::C, shift, 1)
    }

    pub fn times(mut self, c: &Scalar) -> Self {
        self.prefactor = self.prefactor.mul(c);
        self
    }

    pub fn mul(&self, o: &GammaExpr) -> GammaExpr {
        let mut r = self.clone();
        r.factors.extend(o.factors.iter().cloned());
        r.prefactor = r.prefactor.mul(&o.prefactor);
        r
    }

    pub fn inverse(&self) -> Result<GammaExpr, GammaError> {
        let p = match &self.prefactor {
            Scalar::Exact(q) => Scalar::Exact(q.inv().ok_or_else(|| GammaError::Pole("zero prefactor".into()))?),
            Scalar::Numeric(z) => Scalar::Numeric(1.0 / z),
        };
        let factors = self.factors.iter().map(|f| GammaFactor { exponent: -f.exponent, ..f.clone() }).collect();
        Ok(GammaExpr { factors, prefactor: p })
    }

    /// The expression in the variable s+t.
    pub fn shifted(&self, t: &Scalar) -> GammaExpr {
        let factors = self.factors.iter().map(|f| GammaFactor { shift: f.shift.add(t), ..f.clone() }).collect();
        GammaExpr { factors, prefactor: self.prefactor.clone() }
    }

    /// Net pole order at s (positive: pole, negative: zero), from exact
    /// shift arithmetic.
    pub fn pole_order(&self, s: &Scalar) -> i64 {
        self.factors
            .iter()
            .filter(|f| f.gamma_argument(s).is_nonpositive_integer())
            .map(|f| f.exponent as i64)
            .sum()
    }

    pub fn has_pole(&self, s: &Scalar) -> bool {
        self.pole_order(s) > 0
    }

    /// Numeric value at s. Errors on a pole; a point where only denominator
    /// factors are singular evaluates to zero.
    pub fn eval(&self, s: &Scalar) -> Result<Complex64, GammaError> {
        let order = self.pole_order(s);
        if order > 0 {
            return Err(GammaError::Pole(format!("s = {s} in {self}")));
        }
        if order < 0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let z = s.to_complex();
        let mut acc = self.prefactor.to_complex();
        for f in &self.factors {
            if f.gamma_argument(s).is_nonpositive_integer() {
                // cancelling pole pair; the limit needs residues, which no caller uses
                return Err(GammaError::Pole(format!("cancelling poles at s = {s} in {self}")));
            }
            acc *= f.eval(z)?;
        }
        if !acc.re.is_finite() || !acc.im.is_finite() {
            return Err(GammaError::Overflow(format!("s = {s}")));
        }
        Ok(acc)
    }

    pub fn eval_complex(&self, s: Complex64) -> Result<Complex64, GammaError> {
        self.eval(&Scalar::Numeric(s))
    }
}

impl fmt::Display for GammaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.prefactor)?;
        for g in &self.factors {
            let k = match g.kind {
                GammaKind::R => "Γ_R",
                GammaKind::C => "Γ_C",
            };
            write!(f, "·{k}(s+{})", g.shift)?;
            if g.exponent != 1 {
                write!(f, "^{}", g.exponent)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_pole_detection() {
        let e = GammaExpr::one().r(Scalar::int(1)).c(Scalar::ratio(1, 2));
        assert!(e.has_pole(&Scalar::int(-1)));
        assert!(!e.has_pole(&Scalar::int(-2)));
        assert!(e.has_pole(&Scalar::ratio(-1, 2)));
        assert!(!e.has_pole(&Scalar::Exact(Qi::gaussian(-1, 1))));
        let q = e.inverse().unwrap();
        assert_eq!(q.pole_order(&Scalar::int(-1)), -1);
        assert_eq!(q.eval(&Scalar::int(-1)).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn eval_product() {
        let e = GammaExpr::one().c(Scalar::int(0)).c(Scalar::int(1)).times(&Scalar::int(3));
        let v = e.eval(&Scalar::int(1)).unwrap();
        let pi = std::f64::consts::PI;
        assert!((v - 3.0 / pi / (2.0 * pi * pi)).norm() < 1e-15);
    }
}
