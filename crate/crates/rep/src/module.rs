//! Shared machinery for the polynomial models: linear substitutions x ↦ xg
//! and their derivatives x ↦ xX, applied row by row.

use std::sync::Arc;

use archi_exact::{ExactMatrix, MultiPoly, Qi};

use crate::RepError;

/// Variables arranged as rows of a matrix; the group acts on the right.
#[derive(Clone, Debug)]
pub struct RowLayout {
    pub ring: Arc<Vec<String>>,
    /// rows[r][c] = index of variable x_{r,c} in the ring.
    pub rows: Vec<Vec<usize>>,
}

impl RowLayout {
    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    /// P(x) ↦ P(xg).
    pub fn substitute(&self, p: &MultiPoly, g: &ExactMatrix) -> MultiPoly {
        let n = self.width();
        assert_eq!(g.rows(), n);
        let mut images = vec![MultiPoly::zero(&self.ring); self.ring.len()];
        for row in &self.rows {
            for j in 0..n {
                let coeffs: Vec<Qi> = {
                    let mut c = vec![Qi::zero(); self.ring.len()];
                    for k in 0..n {
                        c[row[k]] = g.get(k, j).clone();
                    }
                    c
                };
                images[row[j]] = MultiPoly::linear(&self.ring, &coeffs);
            }
        }
        p.substitute_positional(&images)
    }

    /// d/dt P(x·exp(tX)) at t = 0, i.e. Σ (xX)_{rj} ∂P/∂x_{rj}.
    pub fn derive(&self, p: &MultiPoly, x: &ExactMatrix) -> MultiPoly {
        let n = self.width();
        assert_eq!(x.rows(), n);
        let mut out = MultiPoly::zero(&self.ring);
        for row in &self.rows {
            for j in 0..n {
                let d = p.derivative(row[j]);
                if d.is_zero() {
                    continue;
                }
                let mut c = vec![Qi::zero(); self.ring.len()];
                let mut any = false;
                for k in 0..n {
                    let v = x.get(k, j);
                    if !v.is_zero() {
                        c[row[k]] = v.clone();
                        any = true;
                    }
                }
                if any {
                    out = out.add(&MultiPoly::linear(&self.ring, &c).mul(&d));
                }
            }
        }
        out
    }

    pub fn check_ring(&self, p: &MultiPoly) -> Result<(), RepError> {
        if p.vars() != &self.ring && **p.vars() != *self.ring {
            return Err(RepError::ModuleMismatch);
        }
        Ok(())
    }
}

/// Coordinates relative to a basis of polynomials, through a set of pivot
/// monomials on which the basis restricts to an invertible matrix.
#[derive(Clone, Debug)]
pub struct CoordinateChart {
    pivots: Vec<Vec<u32>>,
    inverse: ExactMatrix,
}

impl CoordinateChart {
    pub fn new(basis: &[MultiPoly]) -> Result<Self, RepError> {
        let mut monos: Vec<Vec<u32>> = basis
            .iter()
            .flat_map(|p| p.terms().map(|(e, _)| e.clone()))
            .collect();
        monos.sort();
        monos.dedup();
        // rows = basis vectors, columns = monomials
        let mut m = ExactMatrix::zeros(basis.len(), monos.len());
        for (i, p) in basis.iter().enumerate() {
            for (j, e) in monos.iter().enumerate() {
                m.set(i, j, p.coeff(e));
            }
        }
        let rref = m.rref();
        if rref.pivots.len() != basis.len() {
            return Err(RepError::Internal("basis is linearly dependent".into()));
        }
        let pivots: Vec<Vec<u32>> = rref.pivots.iter().map(|&j| monos[j].clone()).collect();
        let mut sq = ExactMatrix::zeros(basis.len(), basis.len());
        for (i, p) in basis.iter().enumerate() {
            for (j, e) in pivots.iter().enumerate() {
                sq.set(i, j, p.coeff(e));
            }
        }
        let inverse = sq
            .inverse()
            .ok_or_else(|| RepError::Internal("pivot block not invertible".into()))?;
        Ok(Self { pivots, inverse })
    }

    /// Coordinates c with Σ c_i basis_i = p; errors if p is outside the span.
    pub fn coords(&self, basis: &[MultiPoly], p: &MultiPoly) -> Result<Vec<Qi>, RepError> {
        let row: Vec<Qi> = self.pivots.iter().map(|e| p.coeff(e)).collect();
        // c = row · inverse
        let c = self.inverse.transpose().mul_vec(&row);
        let mut back = MultiPoly::zero(p.vars());
        for (ci, b) in c.iter().zip(basis) {
            back.add_scaled(b, ci);
        }
        if back != *p {
            return Err(RepError::NotInModule);
        }
        Ok(c)
    }
}
