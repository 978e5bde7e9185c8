//! Exterior algebra on (g3/k3)* (basis X_2*, …, X_{−2}*, positions 0..5) and
//! on (g2/k2)* (basis Y_+*, Y_−*, positions 0..2).

use std::collections::BTreeMap;

use archi_exact::{ExactMatrix, MultiPoly, Qi};

use crate::lie::{ad_matrix_gk3, big_ad_matrix_gk2, big_ad_matrix_gk3, x_pos};
use crate::RepError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormSpace {
    /// (g3/k3)*, 5-dimensional.
    Gl3,
    /// (g2/k2)*, 2-dimensional.
    Gl2,
}

impl FormSpace {
    pub fn dim(self) -> usize {
        match self {
            FormSpace::Gl3 => 5,
            FormSpace::Gl2 => 2,
        }
    }
}

/// A homogeneous q-form with exact coefficients on sorted index tuples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WedgeCochain {
    pub space: FormSpace,
    pub degree: usize,
    pub terms: BTreeMap<Vec<u8>, Qi>,
}

/// Sort `idx` in place and return the sign of the permutation, or None if
/// an index repeats.
pub fn sort_sign(idx: &mut [u8]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl WedgeCochain {
    pub fn zero(space: FormSpace, degree: usize) -> Self {
        Self { space, degree, terms: BTreeMap::new() }
    }

    /// X_{i1}* ∧ … ∧ X_{iq}* for spherical indices (GL3).
    pub fn x(indices: &[i32]) -> Self {
        let pos: Vec<u8> = indices.iter().map(|&i| x_pos(i) as u8).collect();
        Self::basis(FormSpace::Gl3, &pos)
    }

    /// Y_+* (sign = 1) or Y_−* (sign = −1).
    pub fn y(sign: i64) -> Self {
        Self::basis(FormSpace::Gl2, &[if sign > 0 { 0 } else { 1 }])
    }

    /// Wedge of basis functionals at the given positions, in the given order.
    pub fn basis(space: FormSpace, positions: &[u8]) -> Self {
        let mut w = Self::zero(space, positions.len());
        let mut idx = positions.to_vec();
        if let Some(s) = sort_sign(&mut idx) {
            w.terms.insert(idx, Qi::from_int(s));
        }
        w
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: Vec<u8>, c: &Qi) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(idx).or_insert_with(Qi::zero);
        *e += c;
        if e.is_zero() {
            let k: Vec<Vec<u8>> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in k {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.space, self.degree), (o.space, o.degree));
        let mut r = self.clone();
        for (k, v) in &o.terms {
            r.add_term(k.clone(), v);
        }
        r
    }

    pub fn scale(&self, s: &Qi) -> Self {
        let mut r = Self::zero(self.space, self.degree);
        for (k, v) in &self.terms {
            r.add_term(k.clone(), &(v * s));
        }
        r
    }

    pub fn wedge(&self, o: &Self) -> Self {
        assert_eq!(self.space, o.space);
        let mut r = Self::zero(self.space, self.degree + o.degree);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut idx: Vec<u8> = a.iter().chain(b).copied().collect();
                if let Some(s) = sort_sign(&mut idx) {
                    r.add_term(idx, &(&(x * y) * &Qi::from_int(s)));
                }
            }
        }
        r
    }

    /// Apply a linear map on the dual space, given as the matrix whose
    /// column j holds the image of the j-th basis functional, extended
    /// multiplicatively (for group elements).
    pub fn pushforward(&self, m: &ExactMatrix) -> Self {
        let mut r = Self::zero(self.space, self.degree);
        for (idx, c) in &self.terms {
            let mut acc = {
                let mut w = Self::zero(self.space, 0);
                w.terms.insert(vec![], c.clone());
                w
            };
            for &j in idx {
                let mut img = Self::zero(self.space, 1);
                for k in 0..m.rows() {
                    img.add_term(vec![k as u8], m.get(k, j as usize));
                }
                acc = acc.wedge(&img);
            }
            r = r.add(&acc);
        }
        r
    }

    /// Apply a linear map on the dual space as a derivation (for Lie elements).
    pub fn derive(&self, m: &ExactMatrix) -> Self {
        let mut r = Self::zero(self.space, self.degree);
        for (idx, c) in &self.terms {
            for (slot, &j) in idx.iter().enumerate() {
                for k in 0..m.rows() {
                    let v = m.get(k, j as usize);
                    if v.is_zero() {
                        continue;
                    }
                    let mut new = idx.clone();
                    new[slot] = k as u8;
                    if let Some(s) = sort_sign(&mut new) {
                        r.add_term(new, &(&(c * v) * &Qi::from_int(s)));
                    }
                }
            }
        }
        r
    }
}

/// Matrix of E acting on (g3/k3)*: E·X_j* = −Σ_k ad(E)[j][k] X_k*, so the
/// column for X_j* is −(row j of ad(E)).
pub fn dual_lie_matrix_gk3(e: &ExactMatrix) -> ExactMatrix {
    ad_matrix_gk3(e).transpose().scale(&Qi::from_int(-1))
}

/// Matrix of k acting on (g3/k3)*: (k·f)(X) = f(Ad(k)^{-1} X).
pub fn dual_group_matrix_gk3(k: &ExactMatrix) -> ExactMatrix {
    big_ad_matrix_gk3(&k.inverse().expect("singular")).transpose()
}

pub fn dual_group_matrix_gk2(k: &ExactMatrix) -> ExactMatrix {
    big_ad_matrix_gk2(&k.inverse().expect("singular")).transpose()
}

/// An element of ⋀^q (g/k)* ⊗ M, stored as form index tuple → polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CochainVec {
    pub space: FormSpace,
    pub degree: usize,
    pub terms: BTreeMap<Vec<u8>, MultiPoly>,
}

impl CochainVec {
    pub fn simple(form: &WedgeCochain, p: &MultiPoly) -> Self {
        let mut terms = BTreeMap::new();
        for (idx, c) in &form.terms {
            terms.insert(idx.clone(), p.scale(c));
        }
        let mut r = Self { space: form.space, degree: form.degree, terms };
        r.prune();
        r
    }

    fn prune(&mut self) {
        self.terms.retain(|_, p| !p.is_zero());
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.space, self.degree), (o.space, o.degree));
        let mut r = self.clone();
        for (k, p) in &o.terms {
            let e = r.terms.entry(k.clone()).or_insert_with(|| MultiPoly::zero(p.vars()));
            *e = e.add(p);
        }
        r.prune();
        r
    }

    pub fn scale(&self, s: &Qi) -> Self {
        let mut r = self.clone();
        for p in r.terms.values_mut() {
            *p = p.scale(s);
        }
        r.prune();
        r
    }

    /// E·(ω⊗P) = (E·ω)⊗P + ω⊗(E·P), with `act` the Lie action on the polynomial factor.
    pub fn lie_act(
        &self,
        dual_matrix: &ExactMatrix,
        act: impl Fn(&MultiPoly) -> Result<MultiPoly, RepError>,
    ) -> Result<Self, RepError> {
        let mut r = Self { space: self.space, degree: self.degree, terms: BTreeMap::new() };
        for (idx, p) in &self.terms {
            let mut f = WedgeCochain::zero(self.space, self.degree);
            f.terms.insert(idx.clone(), Qi::one());
            let df = f.derive(dual_matrix);
            for (k, c) in &df.terms {
                let e = r.terms.entry(k.clone()).or_insert_with(|| MultiPoly::zero(p.vars()));
                e.add_scaled(p, c);
            }
            let dp = act(p)?;
            let e = r.terms.entry(idx.clone()).or_insert_with(|| MultiPoly::zero(p.vars()));
            *e = e.add(&dp);
        }
        r.prune();
        Ok(r)
    }
}
