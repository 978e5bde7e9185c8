use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An element `re + im·i` of Q(i). Both parts are reduced big rationals, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

pub type Qi = GaussianRational;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::new(BigRational::from_integer(n), BigRational::zero())
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::new(rat(n, d), BigRational::zero())
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::new(q, BigRational::zero())
    }

    /// `a + b i` with integer parts.
    pub fn gaussian(a: i64, b: i64) -> Self {
        Self::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    /// i^k for any integer k.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::from_int(1),
            1 => Self::gaussian(0, 1),
            2 => Self::from_int(-1),
            _ => Self::gaussian(0, -1),
        }
    }

    /// (-1)^k.
    pub fn sign_pow(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Self::one()
        } else {
            Self::from_int(-1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// |z|² as a rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|r| self * &r)
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::new(&self.re * q, &self.im * q)
    }

    /// If `self = q·i^k` for a rational `q` and `k ∈ {0, 1}`, the pair `(q, k)`.
    pub fn as_axis(&self) -> Option<(BigRational, u8)> {
        if self.im.is_zero() {
            Some((self.re.clone(), 0))
        } else if self.re.is_zero() {
            Some((self.im.clone(), 1))
        } else {
            None
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denom_lcm(&self) -> BigInt {
        num_integer::lcm(self.re.denom().clone(), self.im.denom().clone())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}i", self.re, -self.im.clone())
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl<'a> Add<&'a Qi> for &'a Qi {
    type Output = Qi;
    fn add(self, o: &Qi) -> Qi {
        Qi::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a Qi> for &'a Qi {
    type Output = Qi;
    fn sub(self, o: &Qi) -> Qi {
        Qi::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a Qi> for &'a Qi {
    type Output = Qi;
    fn mul(self, o: &Qi) -> Qi {
        if self.im.is_zero() && o.im.is_zero() {
            return Qi::new(&self.re * &o.re, BigRational::zero());
        }
        Qi::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl<'a> Div<&'a Qi> for &'a Qi {
    type Output = Qi;
    fn div(self, o: &Qi) -> Qi {
        self.checked_div(o).expect("division by zero in Q(i)")
    }
}

impl Neg for &Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        Qi::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        Qi::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Qi> for Qi {
            type Output = Qi;
            fn $m(self, o: Qi) -> Qi {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Qi> for Qi {
            type Output = Qi;
            fn $m(self, o: &Qi) -> Qi {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Qi> for &'a Qi {
            type Output = Qi;
            fn $m(self, o: Qi) -> Qi {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Qi> for Qi {
    fn add_assign(&mut self, o: &Qi) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&Qi> for Qi {
    fn sub_assign(&mut self, o: &Qi) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&Qi> for Qi {
    fn mul_assign(&mut self, o: &Qi) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for Qi {
    fn sum<I: Iterator<Item = Qi>>(iter: I) -> Qi {
        iter.fold(Qi::zero(), |mut a, b| {
            a += &b;
            a
        })
    }
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared() {
        assert_eq!(Qi::i() * Qi::i(), Qi::from_int(-1));
        assert_eq!(Qi::i_pow(-1), Qi::gaussian(0, -1));
        assert_eq!(Qi::i_pow(7), Qi::i_pow(3));
    }

    #[test]
    fn inverse() {
        let z = Qi::new(rat(3, 2), rat(-1, 5));
        assert!((&z * &z.inv().unwrap()).is_one());
        assert!(Qi::zero().inv().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(Qi::new(rat(1, 2), rat(-3, 1)).to_string(), "1/2-3i");
        assert_eq!(Qi::gaussian(0, 4).to_string(), "4i");
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(11) / (factorial(5) * factorial(5)), BigInt::from(2772));
        assert_eq!(binomial(5, 2), BigInt::from(10));
    }
}
