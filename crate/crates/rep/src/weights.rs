use std::fmt;

use crate::RepError;

/// Dominant weight (μ1, μ2) of GL2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight2 {
    pub mu1: i64,
    pub mu2: i64,
}

impl Weight2 {
    pub fn new(mu1: i64, mu2: i64) -> Result<Self, RepError> {
        if mu1 < mu2 {
            return Err(RepError::NotDominant(format!("({mu1},{mu2})")));
        }
        Ok(Self { mu1, mu2 })
    }

    pub fn dual(self) -> Self {
        Self { mu1: -self.mu2, mu2: -self.mu1 }
    }

    /// Twist by det^m.
    pub fn shift(self, m: i64) -> Self {
        Self { mu1: self.mu1 + m, mu2: self.mu2 + m }
    }

    pub fn dim(self) -> usize {
        (self.mu1 - self.mu2 + 1) as usize
    }

    /// λ = ((κ−2+w)/2, (−κ+2+w)/2) attached to weight κ and central weight w.
    pub fn holomorphic(kappa: i64, w_pi: i64) -> Result<Self, RepError> {
        if kappa < 2 || (kappa - w_pi).rem_euclid(2) != 0 {
            return Err(RepError::Parity(format!("kappa={kappa}, w_pi={w_pi}")));
        }
        Self::new((kappa - 2 + w_pi) / 2, (-kappa + 2 + w_pi) / 2)
    }
}

/// Dominant weight (μ1, μ2, μ3) of GL3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight3 {
    pub mu1: i64,
    pub mu2: i64,
    pub mu3: i64,
}

impl Weight3 {
    pub fn new(mu1: i64, mu2: i64, mu3: i64) -> Result<Self, RepError> {
        if mu1 < mu2 || mu2 < mu3 {
            return Err(RepError::NotDominant(format!("({mu1},{mu2},{mu3})")));
        }
        Ok(Self { mu1, mu2, mu3 })
    }

    pub fn dual(self) -> Self {
        Self { mu1: -self.mu3, mu2: -self.mu2, mu3: -self.mu1 }
    }

    pub fn is_pure(self) -> bool {
        self.mu1 + self.mu3 == 2 * self.mu2
    }

    /// Weyl dimension formula.
    pub fn dim(self) -> usize {
        let a = self.mu1 - self.mu2;
        let b = self.mu2 - self.mu3;
        ((a + 1) * (b + 1) * (a + b + 2) / 2) as usize
    }

    /// μ = ((ℓ−3+w)/2, w/2, (−ℓ+3+w)/2) for the cohomological weight ℓ.
    pub fn cohomological(ell: i64, w: i64) -> Result<Self, RepError> {
        if ell < 3 || ell % 2 == 0 || w % 2 != 0 {
            return Err(RepError::Parity(format!("ell={ell}, w={w}")));
        }
        Self::new((ell - 3 + w) / 2, w / 2, (-ell + 3 + w) / 2)
    }

    pub fn as_array(self) -> [i64; 3] {
        [self.mu1, self.mu2, self.mu3]
    }
}

impl fmt::Display for Weight2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.mu1, self.mu2)
    }
}

impl fmt::Display for Weight3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.mu1, self.mu2, self.mu3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_dims() {
        assert_eq!(Weight3::new(1, 0, -1).unwrap().dim(), 8);
        assert_eq!(Weight3::new(0, 0, 0).unwrap().dim(), 1);
        assert_eq!(Weight3::new(1, 0, 0).unwrap().dim(), 3);
        assert_eq!(Weight3::new(2, 0, -2).unwrap().dim(), 27);
    }

    #[test]
    fn cohomological_weight() {
        assert_eq!(Weight3::cohomological(5, 0).unwrap(), Weight3::new(1, 0, -1).unwrap());
        assert_eq!(Weight3::cohomological(5, 2).unwrap(), Weight3::new(2, 1, 0).unwrap());
        assert!(Weight3::cohomological(4, 0).is_err());
        assert_eq!(Weight2::holomorphic(3, 1).unwrap(), Weight2::new(1, 0).unwrap());
    }

    #[test]
    fn duals() {
        let w = Weight3::new(3, 1, -2).unwrap();
        assert_eq!(w.dual().dual(), w);
        assert_eq!(Weight2::new(1, 0).unwrap().dual(), Weight2::new(0, -1).unwrap());
    }
}
