use std::sync::Arc;

use archi_exact::{ExactMatrix, MultiPoly, Qi};

use crate::gl2::action_matrix;
use crate::module::{CoordinateChart, RowLayout};
use crate::RepError;

/// V_ℓ: degree-ℓ polynomials in x1, x2, x3 modulo x1²+x2²+x3², kept in the
/// normal form of degree ≤ 1 in x3. Basis v_i = (sgn(i) x1 + √−1 x2)^{|i|} x3^{ℓ−|i|},
/// stored in the order i = ℓ, ℓ−1, …, −ℓ.
#[derive(Clone, Debug)]
pub struct SO3Module {
    pub ell: u32,
    layout: RowLayout,
    basis: Vec<MultiPoly>,
    chart: CoordinateChart,
}

impl SO3Module {
    pub fn new(ell: u32) -> Self {
        let ring = MultiPoly::ring(&["x1", "x2", "x3"]);
        let layout = RowLayout { ring: ring.clone(), rows: vec![vec![0, 1, 2]] };
        let mut basis = Vec::new();
        for i in (-(ell as i64)..=ell as i64).rev() {
            basis.push(normal_form(&spherical_poly(&ring, ell, i)));
        }
        let chart = CoordinateChart::new(&basis).expect("v_i are a basis of V_ell");
        Self { ell, layout, basis, chart }
    }

    pub fn ring(&self) -> &Arc<Vec<String>> {
        &self.layout.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_pos(&self, i: i64) -> usize {
        (self.ell as i64 - i) as usize
    }

    /// Normal form of v_i.
    pub fn v(&self, i: i64) -> &MultiPoly {
        &self.basis[self.index_pos(i)]
    }

    /// Coordinates in the v basis of a (not necessarily reduced) polynomial.
    pub fn coords(&self, p: &MultiPoly) -> Result<Vec<Qi>, RepError> {
        self.layout.check_ring(p)?;
        self.chart.coords(&self.basis, &normal_form(p))
    }

    pub fn group_act(&self, g: &ExactMatrix, p: &MultiPoly) -> Result<MultiPoly, RepError> {
        self.layout.check_ring(p)?;
        Ok(normal_form(&self.layout.substitute(p, g)))
    }

    /// Lie action, valid for X in so(3) (the quadric is invariant).
    pub fn lie_act(&self, x: &ExactMatrix, p: &MultiPoly) -> Result<MultiPoly, RepError> {
        self.layout.check_ring(p)?;
        Ok(normal_form(&self.layout.derive(p, x)))
    }

    pub fn lie_matrix(&self, x: &ExactMatrix) -> Result<ExactMatrix, RepError> {
        let mut cols = Vec::with_capacity(self.dim());
        for b in &self.basis {
            cols.push(self.coords(&self.lie_act(x, b)?)?);
        }
        Ok(action_matrix(self.dim(), |k| cols[k].clone()))
    }
}

/// (sgn(i) x1 + √−1 x2)^{|i|} x3^{ℓ−|i|} as an honest polynomial.
pub fn spherical_poly(ring: &Arc<Vec<String>>, ell: u32, i: i64) -> MultiPoly {
    let k = i.unsigned_abs() as u32;
    let sgn = if i < 0 { -1 } else { 1 };
    let lin = MultiPoly::linear(ring, &[Qi::from_int(sgn), Qi::i(), Qi::zero()]);
    let x3 = MultiPoly::var(ring, 2);
    lin.pow(k).mul(&x3.pow(ell - k))
}

/// Eliminate x3^k, k ≥ 2, through x3² = −x1² − x2².
pub fn normal_form(p: &MultiPoly) -> MultiPoly {
    let ring = p.vars().clone();
    let mut out = MultiPoly::zero(&ring);
    for (e, c) in p.terms() {
        let (a, b, k) = (e[0], e[1], e[2]);
        let q = k / 2;
        // (−x1² − x2²)^q = (−1)^q Σ C(q,r) x1^{2r} x2^{2(q−r)}
        for r in 0..=q {
            let coeff = c * &Qi::from_bigint(archi_exact::binomial(q as u64, r as u64))
                * Qi::sign_pow(q as i64);
            out.add_term(vec![a + 2 * r, b + 2 * (q - r), k % 2], &coeff);
        }
    }
    out
}

/// The SO(3)-invariant vector Σ c_i v_i ⊗ v_{−i} of V_ℓ ⊗ V_ℓ, with
/// c_i = (−1)^i / ((ℓ−i)!(ℓ+i)!), checked against E_+, E_−, E_12 exactly.
#[derive(Clone, Debug)]
pub struct InvariantVector {
    pub ell: u32,
    /// (i, c_i) for i = −ℓ..ℓ.
    pub coeffs: Vec<(i64, Qi)>,
}

pub fn so3_invariant_vector(ell: u32) -> Result<InvariantVector, RepError> {
    let l = ell as i64;
    let coeffs: Vec<(i64, Qi)> = (-l..=l)
        .map(|i| {
            let d = archi_exact::factorial((l - i) as u64) * archi_exact::factorial((l + i) as u64);
            let q = Qi::sign_pow(i) * Qi::from_bigint(d).inv().unwrap();
            (i, q)
        })
        .collect();
    let module = SO3Module::new(ell);
    let n = module.dim();
    let mut t = ExactMatrix::zeros(n, n);
    for (i, c) in &coeffs {
        t.set(module.index_pos(*i), module.index_pos(-*i), c.clone());
    }
    for e in [crate::lie::e_plus(), crate::lie::e_minus(), crate::lie::e12()] {
        let a = module.lie_matrix(&e)?;
        // (A ⊗ 1 + 1 ⊗ A) T  ==  A T + T Aᵀ
        let image = a.mul(&t).add(&t.mul(&a.transpose()));
        if !image.is_zero() {
            return Err(RepError::IdentityFailed("invariant vector not annihilated".into()));
        }
    }
    Ok(InvariantVector { ell, coeffs })
}

/// The SO(3)-invariant symmetric bilinear form on V_ℓ, solved from the
/// invariance system and normalized by ⟨v_0, v_0⟩ = 1. Returns ⟨v_i, v_{−i}⟩.
pub fn so3_invariant_form(ell: u32) -> Result<Vec<(i64, Qi)>, RepError> {
    let module = SO3Module::new(ell);
    let n = module.dim();
    let gens: Vec<ExactMatrix> = [crate::lie::e_plus(), crate::lie::e_minus(), crate::lie::e12()]
        .iter()
        .map(|e| module.lie_matrix(e))
        .collect::<Result<_, _>>()?;
    // unknown B[a][b]; equations (AᵀB + BA)[a][b] = 0
    let mut rows = Vec::new();
    for a in &gens {
        for p in 0..n {
            for q in 0..n {
                let mut row = vec![Qi::zero(); n * n];
                for k in 0..n {
                    let x = a.get(k, p);
                    if !x.is_zero() {
                        row[k * n + q] += x;
                    }
                    let y = a.get(k, q);
                    if !y.is_zero() {
                        row[p * n + k] += y;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let ker = ExactMatrix::from_rows(rows).kernel();
    if ker.len() != 1 {
        return Err(RepError::KernelDimension { expected: 1, found: ker.len() });
    }
    let v = &ker[0];
    let l = ell as i64;
    let zero = module.index_pos(0);
    let norm = v[zero * n + zero].clone();
    let out = (-l..=l)
        .map(|i| {
            let (a, b) = (module.index_pos(i), module.index_pos(-i));
            (i, &v[a * n + b] / &norm)
        })
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{e12, e_minus, e_plus};

    #[test]
    fn relations_small() {
        for ell in 0..=4u32 {
            let m = SO3Module::new(ell);
            let l = ell as i64;
            for i in -l..=l {
                let v = m.v(i).clone();
                assert_eq!(m.lie_act(&e12(), &v).unwrap(), v.scale(&Qi::gaussian(0, i)));
                let up = m.lie_act(&e_plus(), &v).unwrap();
                let expect = if i < l { m.v(i + 1).scale(&Qi::from_int(l - i)) } else { MultiPoly::zero(m.ring()) };
                assert_eq!(up, expect);
                let down = m.lie_act(&e_minus(), &v).unwrap();
                let expect = if i > -l { m.v(i - 1).scale(&Qi::from_int(-l - i)) } else { MultiPoly::zero(m.ring()) };
                assert_eq!(down, expect);
            }
        }
    }

    #[test]
    fn invariant_vector_ratio() {
        let v = so3_invariant_vector(1).unwrap();
        let c0 = &v.coeffs[1].1;
        let c1 = &v.coeffs[2].1;
        assert_eq!(c1 / c0, Qi::from_ratio(-1, 2));
        assert!(so3_invariant_vector(2).is_ok());
    }

    #[test]
    fn invariant_form_matches_ladder_formula() {
        // ⟨v_i, v_−i⟩ / ⟨v_0, v_0⟩ = (−1)^i (ℓ+i)!(ℓ−i)!/(ℓ!)²
        for ell in [1u32, 3, 5] {
            let l = ell as i64;
            for (i, r) in so3_invariant_form(ell).unwrap() {
                let num = archi_exact::factorial((l + i) as u64) * archi_exact::factorial((l - i) as u64);
                let den = archi_exact::factorial(ell as u64).pow(2);
                let expect = Qi::sign_pow(i) * Qi::from_rational(archi_exact::BigRational::new(num, den));
                assert_eq!(r, expect, "ell={ell}, i={i}");
            }
        }
    }
}
