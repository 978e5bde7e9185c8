use std::sync::Arc;

use archi_exact::{ExactMatrix, MultiPoly, Qi};

use crate::lie::trace;
use crate::module::RowLayout;
use crate::weights::Weight2;
use crate::RepError;

/// M_λ: homogeneous polynomials of degree λ1−λ2 in (x, y), with
/// ρ(g)P = det(g)^{λ2} P((x,y)g). Basis x^{d−k} y^k, k = 0..d.
#[derive(Clone, Debug)]
pub struct GL2Module {
    pub weight: Weight2,
    layout: RowLayout,
    basis: Vec<MultiPoly>,
}

impl GL2Module {
    pub fn new(weight: Weight2) -> Self {
        let ring = MultiPoly::ring(&["x", "y"]);
        let d = (weight.mu1 - weight.mu2) as u32;
        let basis = (0..=d)
            .map(|k| MultiPoly::monomial(&ring, vec![d - k, k], Qi::one()))
            .collect();
        Self { weight, layout: RowLayout { ring, rows: vec![vec![0, 1]] }, basis }
    }

    pub fn ring(&self) -> &Arc<Vec<String>> {
        &self.layout.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self) -> u32 {
        (self.weight.mu1 - self.weight.mu2) as u32
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    /// Torus weight of x^{d−k} y^k.
    pub fn basis_weight(&self, k: usize) -> [i64; 2] {
        let d = self.degree() as i64;
        [d - k as i64 + self.weight.mu2, k as i64 + self.weight.mu2]
    }

    /// a x + b y as a polynomial in this module's ring.
    pub fn linear(&self, a: Qi, b: Qi) -> MultiPoly {
        MultiPoly::linear(self.ring(), &[a, b])
    }

    pub fn coords(&self, p: &MultiPoly) -> Result<Vec<Qi>, RepError> {
        self.layout.check_ring(p)?;
        let d = self.degree();
        for (e, _) in p.terms() {
            if e[0] + e[1] != d {
                return Err(RepError::NotInModule);
            }
        }
        Ok((0..=d).map(|k| p.coeff(&[d - k, k])).collect())
    }

    pub fn from_coords(&self, c: &[Qi]) -> MultiPoly {
        let mut p = MultiPoly::zero(self.ring());
        for (ci, b) in c.iter().zip(&self.basis) {
            p.add_scaled(b, ci);
        }
        p
    }

    pub fn group_act(&self, g: &ExactMatrix, p: &MultiPoly) -> Result<MultiPoly, RepError> {
        self.layout.check_ring(p)?;
        let det = g.det();
        if det.is_zero() {
            return Err(RepError::Singular);
        }
        Ok(self.layout.substitute(p, g).scale(&det.pow(self.weight.mu2)))
    }

    pub fn lie_act(&self, x: &ExactMatrix, p: &MultiPoly) -> Result<MultiPoly, RepError> {
        self.layout.check_ring(p)?;
        let c = &trace(x) * &Qi::from_int(self.weight.mu2);
        Ok(self.layout.derive(p, x).add(&p.scale(&c)))
    }

    /// Column k = coordinates of X·(basis_k).
    pub fn lie_matrix(&self, x: &ExactMatrix) -> ExactMatrix {
        action_matrix(self.dim(), |k| {
            self.coords(&self.lie_act(x, &self.basis[k]).unwrap()).unwrap()
        })
    }

    pub fn group_matrix(&self, g: &ExactMatrix) -> Result<ExactMatrix, RepError> {
        let mut cols = Vec::with_capacity(self.dim());
        for b in &self.basis {
            cols.push(self.coords(&self.group_act(g, b)?)?);
        }
        Ok(action_matrix(self.dim(), |k| cols[k].clone()))
    }
}

pub(crate) fn action_matrix(dim: usize, mut col: impl FnMut(usize) -> Vec<Qi>) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(dim, dim);
    for k in 0..dim {
        for (i, v) in col(k).into_iter().enumerate() {
            m.set(i, k, v);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::elementary;

    #[test]
    fn diagonal_action() {
        let m = GL2Module::new(Weight2::new(2, -1).unwrap());
        let g = ExactMatrix::from_int_rows(&[&[2, 0], &[0, 3]]);
        // x^2 y has weight (2-1, 1-1) = (1, 0): eigenvalue 2
        let p = &m.basis()[1];
        assert_eq!(m.group_act(&g, p).unwrap(), p.scale(&Qi::from_int(2)));
        assert_eq!(m.basis_weight(1), [1, 0]);
    }

    #[test]
    fn lie_is_derivative_of_group() {
        let m = GL2Module::new(Weight2::new(3, 1).unwrap());
        let x = elementary(2, 1, 2);
        // exp(t e12) = 1 + t e12 exactly; compare first-order terms at t = 1 on x^2:
        // ρ(1+e12)(y^2) = (x+y)^2, Lie action gives 2xy
        let y2 = &m.basis()[2];
        assert_eq!(
            m.lie_act(&x, y2).unwrap(),
            MultiPoly::monomial(m.ring(), vec![1, 1], Qi::from_int(2))
        );
    }
}
