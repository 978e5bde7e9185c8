use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use archi_exact::{ExactMatrix, MultiPoly, Qi};

use crate::gl2::action_matrix;
use crate::lie::trace;
use crate::module::{CoordinateChart, RowLayout};
use crate::weights::Weight3;
use crate::RepError;

const VARS: [&str; 6] = ["x11", "x12", "x13", "x21", "x22", "x23"];

/// M_μ: polynomials in the 2×3 matrix x spanned by products of the second
/// row entries x_{2i} and the 2×2 minors of x, with ρ(g)P = det(g)^{μ3} P(xg).
#[derive(Clone, Debug)]
pub struct GL3Module {
    pub weight: Weight3,
    layout: RowLayout,
    basis: Vec<MultiPoly>,
    /// (n1, n2, n3, n12, n13, n23) of each basis product.
    labels: Vec<[u32; 6]>,
    chart: CoordinateChart,
}

fn compositions3(total: u32) -> Vec<[u32; 3]> {
    let mut v = Vec::new();
    for a in (0..=total).rev() {
        for b in (0..=total - a).rev() {
            v.push([a, b, total - a - b]);
        }
    }
    v
}

impl GL3Module {
    pub fn new(weight: Weight3) -> Result<Self, RepError> {
        let ring = MultiPoly::ring(&VARS);
        let layout = RowLayout { ring: ring.clone(), rows: vec![vec![0, 1, 2], vec![3, 4, 5]] };
        let x = |i: usize| MultiPoly::var(&ring, i);
        let minor = |j: usize, k: usize| x(j).mul(&x(3 + k)).sub(&x(k).mul(&x(3 + j)));
        let seconds = [x(3), x(4), x(5)];
        let minors = [minor(0, 1), minor(0, 2), minor(1, 2)];
        let a = (weight.mu1 - weight.mu2) as u32;
        let b = (weight.mu2 - weight.mu3) as u32;

        // Candidates in lexicographically decreasing exponent order, so the
        // highest weight vector x21^a m12^b comes first; keep the ones that
        // are independent of their predecessors.
        let mut candidates = Vec::new();
        for n in compositions3(a) {
            for k in compositions3(b) {
                let mut p = MultiPoly::constant(&ring, Qi::one());
                for i in 0..3 {
                    p = p.mul(&seconds[i].pow(n[i])).mul(&minors[i].pow(k[i]));
                }
                candidates.push(([n[0], n[1], n[2], k[0], k[1], k[2]], p));
            }
        }
        let mut monos: Vec<Vec<u32>> = candidates
            .iter()
            .flat_map(|(_, p)| p.terms().map(|(e, _)| e.clone()))
            .collect();
        monos.sort();
        monos.dedup();
        let mut mat = ExactMatrix::zeros(monos.len(), candidates.len());
        for (j, (_, p)) in candidates.iter().enumerate() {
            for (i, e) in monos.iter().enumerate() {
                let c = p.coeff(e);
                if !c.is_zero() {
                    mat.set(i, j, c);
                }
            }
        }
        let keep = mat.rref().pivots;
        let (labels, basis): (Vec<_>, Vec<_>) =
            keep.iter().map(|&j| candidates[j].clone()).unzip();
        if basis.len() != weight.dim() {
            return Err(RepError::Internal(format!(
                "M_{weight} has {} independent products, Weyl dimension {}",
                basis.len(),
                weight.dim()
            )));
        }
        let chart = CoordinateChart::new(&basis)?;
        Ok(Self { weight, layout, basis, labels, chart })
    }

    pub fn ring(&self) -> &Arc<Vec<String>> {
        &self.layout.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn labels(&self) -> &[[u32; 6]] {
        &self.labels
    }

    /// P^+_μ = x21^{μ1−μ2} · m12^{μ2−μ3}, always the first basis vector.
    pub fn highest_weight_vector(&self) -> &MultiPoly {
        &self.basis[0]
    }

    /// Torus weight of basis vector k.
    pub fn basis_weight(&self, k: usize) -> [i64; 3] {
        let l = self.labels[k];
        let mu3 = self.weight.mu3;
        [
            l[0] as i64 + (l[3] + l[4]) as i64 + mu3,
            l[1] as i64 + (l[3] + l[5]) as i64 + mu3,
            l[2] as i64 + (l[4] + l[5]) as i64 + mu3,
        ]
    }

    /// Index of the unique basis vector of weight (μ3, μ2, μ1).
    pub fn lowest_weight_index(&self) -> usize {
        let target = [self.weight.mu3, self.weight.mu2, self.weight.mu1];
        (0..self.dim())
            .find(|&k| self.basis_weight(k) == target)
            .expect("lowest weight vector missing")
    }

    pub fn coords(&self, p: &MultiPoly) -> Result<Vec<Qi>, RepError> {
        self.layout.check_ring(p)?;
        self.chart.coords(&self.basis, p)
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
        Ok(self.layout.substitute(p, g).scale(&det.pow(self.weight.mu3)))
    }

    pub fn lie_act(&self, x: &ExactMatrix, p: &MultiPoly) -> Result<MultiPoly, RepError> {
        self.layout.check_ring(p)?;
        let c = &trace(x) * &Qi::from_int(self.weight.mu3);
        Ok(self.layout.derive(p, x).add(&p.scale(&c)))
    }

    pub fn lie_matrix(&self, x: &ExactMatrix) -> Result<ExactMatrix, RepError> {
        let mut cols = Vec::with_capacity(self.dim());
        for b in &self.basis {
            cols.push(self.coords(&self.lie_act(x, b)?)?);
        }
        Ok(action_matrix(self.dim(), |k| cols[k].clone()))
    }

    pub fn group_matrix(&self, g: &ExactMatrix) -> Result<ExactMatrix, RepError> {
        let mut cols = Vec::with_capacity(self.dim());
        for b in &self.basis {
            cols.push(self.coords(&self.group_act(g, b)?)?);
        }
        Ok(action_matrix(self.dim(), |k| cols[k].clone()))
    }

    /// Test hook: replace the last basis vector by a polynomial outside the
    /// model so that downstream exact checks must fail.
    pub fn corrupted(&self) -> Self {
        let mut m = self.clone();
        let last = m.basis.len() - 1;
        let deg = m.basis[last].total_degree().unwrap_or(0);
        let mut e = vec![0u32; 6];
        e[0] = deg;
        let bad = m.basis[last].add(&MultiPoly::monomial(m.ring(), e, Qi::one()));
        m.basis[last] = bad;
        if let Ok(chart) = CoordinateChart::new(&m.basis) {
            m.chart = chart;
        }
        m
    }
}

/// Shared, lazily built module for a weight. Concurrent first calls may
/// each build; the first insertion wins and all callers see the same value.
pub fn gl3_module(weight: Weight3) -> Result<Arc<GL3Module>, RepError> {
    static CACHE: OnceLock<Mutex<HashMap<Weight3, Arc<GL3Module>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&weight) {
        return Ok(m.clone());
    }
    let built = Arc::new(GL3Module::new(weight)?);
    let mut guard = cache.lock().unwrap();
    Ok(guard.entry(weight).or_insert(built).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjoint_dimension() {
        let m = GL3Module::new(Weight3::new(1, 0, -1).unwrap()).unwrap();
        assert_eq!(m.dim(), 8);
        assert_eq!(m.basis_weight(0), [1, 0, -1]);
        assert_eq!(m.basis_weight(m.lowest_weight_index()), [-1, 0, 1]);
    }

    #[test]
    fn dims_match_weyl() {
        for (a, b, c) in [(0, 0, 0), (1, 0, 0), (0, 0, -1), (2, 0, -2), (3, 1, 0), (2, 2, -1)] {
            let w = Weight3::new(a, b, c).unwrap();
            assert_eq!(GL3Module::new(w).unwrap().dim(), w.dim());
        }
    }

    #[test]
    fn highest_weight_killed_by_raising() {
        let m = GL3Module::new(Weight3::new(2, 0, -1).unwrap()).unwrap();
        for (j, k) in [(1, 2), (2, 3), (1, 3)] {
            let e = crate::lie::elementary(3, j, k);
            assert!(m.lie_act(&e, m.highest_weight_vector()).unwrap().is_zero());
        }
    }

    #[test]
    fn corrupted_basis_leaves_model() {
        let m = GL3Module::new(Weight3::new(1, 0, -1).unwrap()).unwrap().corrupted();
        let e = crate::lie::elementary(3, 2, 1);
        let last = m.basis().last().unwrap().clone();
        assert!(m.lie_act(&e, &last).and_then(|p| m.coords(&p)).is_err()
            || m.lie_matrix(&e).is_err());
    }
}
