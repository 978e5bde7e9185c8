use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::qi::Qi;
use crate::ExactError;

pub type Exponents = Vec<u32>;

/// Sparse polynomial over Q(i) in an ordered list of named variables.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Exponents, Qi>,
}

impl MultiPoly {
    pub fn zero(vars: &Arc<Vec<String>>) -> Self {
        Self { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn ring(names: &[&str]) -> Arc<Vec<String>> {
        Arc::new(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn constant(vars: &Arc<Vec<String>>, c: Qi) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn var(vars: &Arc<Vec<String>>, idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Self::monomial(vars, e, Qi::one())
    }

    pub fn monomial(vars: &Arc<Vec<String>>, exps: Exponents, c: Qi) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Linear form Σ c_j x_j.
    pub fn linear(vars: &Arc<Vec<String>>, coeffs: &[Qi]) -> Self {
        let mut p = Self::zero(vars);
        for (j, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; vars.len()];
                e[j] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Qi)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Qi {
        self.terms.get(exps).cloned().unwrap_or_else(Qi::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    fn same_ring(&self, o: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &o.vars) || self.vars == o.vars,
            "polynomials live in different rings"
        );
    }

    pub fn add_term(&mut self, exps: Exponents, c: &Qi) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.same_ring(o);
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c);
        }
        r
    }

    pub fn add_scaled(&mut self, o: &Self, s: &Qi) {
        self.same_ring(o);
        if s.is_zero() {
            return;
        }
        for (e, c) in &o.terms {
            self.add_term(e.clone(), &(c * s));
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(o, &Qi::from_int(-1));
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&Qi::from_int(-1))
    }

    pub fn scale(&self, s: &Qi) -> Self {
        if s.is_zero() {
            return Self::zero(&self.vars);
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.same_ring(o);
        let mut r = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, &(c1 * c2));
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(&self.vars, Qi::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self, idx: usize) -> Self {
        let mut r = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[idx] -= 1;
            r.add_term(e2, &c.scale(&BigRational::from_integer(BigInt::from(e[idx]))));
        }
        r
    }

    /// Replace variable `j` by `images[j]`. All images must share one target ring.
    pub fn substitute_positional(&self, images: &[MultiPoly]) -> Self {
        assert_eq!(images.len(), self.vars.len());
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        // powers[j][k] = images[j]^k, built lazily up to the needed degree
        let mut max_e = vec![0u32; self.vars.len()];
        for e in self.terms.keys() {
            for (m, &x) in max_e.iter_mut().zip(e) {
                *m = (*m).max(x);
            }
        }
        let powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .zip(&max_e)
            .map(|(img, &m)| {
                let mut v = vec![MultiPoly::constant(&target, Qi::one())];
                for k in 1..=m as usize {
                    let next = v[k - 1].mul(img);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut r = Self::zero(&target);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (j, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&powers[j][k as usize]);
                }
            }
            for (e2, c2) in t.terms {
                r.add_term(e2, &c2);
            }
        }
        r
    }

    /// Substitute each variable occurring in `self` by the polynomial the map
    /// assigns to its name.
    pub fn substitute(&self, map: &BTreeMap<String, MultiPoly>) -> Result<Self, ExactError> {
        let mut images = Vec::with_capacity(self.vars.len());
        let target = map.values().next().map(|p| p.vars.clone());
        for (j, name) in self.vars.iter().enumerate() {
            match map.get(name) {
                Some(p) => images.push(p.clone()),
                None => {
                    if self.terms.keys().any(|e| e[j] > 0) {
                        return Err(ExactError::UnboundVariable(name.clone()));
                    }
                    // absent from every term, so any placeholder will do
                    let t = target.clone().unwrap_or_else(|| self.vars.clone());
                    images.push(MultiPoly::zero(&t));
                }
            }
        }
        if images.is_empty() {
            return Ok(self.clone());
        }
        Ok(self.substitute_positional(&images))
    }

    /// Evaluate at complex floating point values.
    pub fn eval_f64(&self, point: &[(f64, f64)]) -> (f64, f64) {
        let mut acc = (0.0, 0.0);
        for (e, c) in &self.terms {
            let (cr, ci) = c.to_f64_pair();
            let mut t = (cr, ci);
            for (j, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = (t.0 * point[j].0 - t.1 * point[j].1, t.0 * point[j].1 + t.1 * point[j].0);
                }
            }
            acc.0 += t.0;
            acc.1 += t.1;
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&Qi) -> Qi) -> Self {
        let mut r = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), &f(c));
        }
        r
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (j, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*{}", self.vars[j])?,
                    _ => write!(f, "*{}^{}", self.vars[j], k)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<Vec<String>> {
        MultiPoly::ring(&["x", "y"])
    }

    #[test]
    fn substitute_x_to_x_plus_iy() {
        let r = MultiPoly::ring(&["x"]);
        let t = xy();
        let p = MultiPoly::var(&r, 0);
        let mut map = BTreeMap::new();
        map.insert("x".to_string(), MultiPoly::linear(&t, &[Qi::one(), Qi::i()]));
        let q = p.substitute(&map).unwrap();
        assert_eq!(q, MultiPoly::linear(&t, &[Qi::one(), Qi::i()]));
    }

    #[test]
    fn substitute_identity_and_scaling() {
        let t = xy();
        let x = MultiPoly::var(&t, 0);
        let y = MultiPoly::var(&t, 1);
        let p = x.mul(&x).add(&y.mul(&y));
        let mut map = BTreeMap::new();
        map.insert("x".to_string(), x.clone());
        map.insert("y".to_string(), y.clone());
        assert_eq!(p.substitute(&map).unwrap(), p);

        let q = x.mul(&y);
        map.insert("x".to_string(), x.scale(&Qi::from_int(2)));
        map.insert("y".to_string(), y.scale(&Qi::from_int(3)));
        assert_eq!(q.substitute(&map).unwrap(), q.scale(&Qi::from_int(6)));
    }

    #[test]
    fn unbound_variable() {
        let t = xy();
        let p = MultiPoly::var(&t, 1);
        let mut map = BTreeMap::new();
        map.insert("x".to_string(), MultiPoly::var(&t, 0));
        assert!(matches!(p.substitute(&map), Err(ExactError::UnboundVariable(v)) if v == "y"));
    }

    #[test]
    fn derivative_of_cube() {
        let t = xy();
        let x = MultiPoly::var(&t, 0);
        let d = x.pow(3).derivative(0);
        assert_eq!(d, x.pow(2).scale(&Qi::from_int(3)));
        assert!(x.derivative(1).is_zero());
    }
}
