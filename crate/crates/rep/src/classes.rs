//! The explicit (g, K)-cohomology classes for GL3 (bottom and top degree)
//! and GL2, the relation between E₋ and E₊ chains, and the
//! representation-theoretic constants entering the Rankin–Selberg and
//! adjoint pairings.

use archi_exact::{factorial, BigRational, ExactMatrix, MultiPoly, Qi};

use crate::gl2::GL2Module;
use crate::gl3::{gl3_module, GL3Module};
use crate::lie::{antidiag, e_minus, e_plus, h_cayley, h_minus, h_plus};
use crate::pairing::{
    branching_hom, gl2_volume_coefficient, invariant_pairing_gl2, invariant_pairing_gl3, pairing_s,
    pairing_s5, BranchingHom, Gl3Pairing,
};
use crate::so3::so3_invariant_form;
use crate::wedge::{dual_lie_matrix_gk3, CochainVec, FormSpace, WedgeCochain};
use crate::weights::{Weight2, Weight3};
use crate::RepError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassKind {
    Bottom,
    Top,
    Gl2Plus,
    Gl2Minus,
}

/// One summand: `coeff · W_label ⊗ cochain`. For GL3 classes the label is
/// the SO(3) index i; for GL2 classes it is +1 (W⁺) or −1 (W⁻).
#[derive(Clone, Debug)]
pub struct ClassTerm {
    pub label: i64,
    pub coeff: Qi,
    pub cochain: CochainVec,
}

#[derive(Clone, Debug)]
pub struct CohomologyVector {
    pub kind: ClassKind,
    pub terms: Vec<ClassTerm>,
}

impl CohomologyVector {
    pub fn term(&self, label: i64) -> Option<&ClassTerm> {
        self.terms.iter().find(|t| t.label == label)
    }
}

/// Parameters of a class; GL3 kinds read (ell, w), GL2 kinds read (kappa, w).
#[derive(Clone, Copy, Debug)]
pub struct ClassParams {
    pub ell_or_kappa: i64,
    pub w: i64,
}

fn factorial_inv(n: i64) -> Qi {
    Qi::from_bigint(factorial(n as u64)).inv().unwrap()
}

/// v, E·v, E²·v, …, E^n·v for a cochain with values in a GL3 module.
fn chain(module: &GL3Module, start: CochainVec, e: &ExactMatrix, n: usize) -> Result<Vec<CochainVec>, RepError> {
    let dual = dual_lie_matrix_gk3(e);
    let mut out = vec![start];
    for _ in 0..n {
        let next = out.last().unwrap().lie_act(&dual, |p| module.lie_act(e, p))?;
        out.push(next);
    }
    Ok(out)
}

/// The seed X_{s1}*∧X_{s2}*(∧X_0*) ⊗ ρ(h_s)P⁺ of the E-chains, with values
/// in `module` (which plays the role of M_μ^∨ for the class of μ).
fn seed(module: &GL3Module, lowering: bool, top: bool) -> Result<CochainVec, RepError> {
    let (idx, h) = if lowering { ([-1, -2], h_plus()) } else { ([1, 2], h_minus()) };
    let mut form = WedgeCochain::x(&idx);
    if top {
        form = WedgeCochain::x(&[0]).wedge(&form);
    }
    let p = module.group_act(&h, module.highest_weight_vector())?;
    Ok(CochainVec::simple(&form, &p))
}

/// GL3 data for cohomological weight ℓ and purity weight w.
#[derive(Clone, Debug)]
pub struct Gl3Class {
    pub ell: i64,
    pub w: i64,
    /// μ; the cochains take values in M_{μ^∨}.
    pub mu: Weight3,
    pub values: std::sync::Arc<GL3Module>,
    /// E₋^k(seed) for k = 0..2ℓ.
    pub lowering: Vec<CochainVec>,
    pub top: bool,
}

impl Gl3Class {
    pub fn new(ell: i64, w: i64, top: bool) -> Result<Self, RepError> {
        let mu = Weight3::cohomological(ell, w)?;
        let values = gl3_module(mu.dual())?;
        let lowering = chain(&values, seed(&values, true, top)?, &e_minus(), 2 * ell as usize)?;
        Ok(Self { ell, w, mu, values, lowering, top })
    }

    /// E₊^k(X₁*∧X₂*(∧X₀*) ⊗ ρ(h′)P⁺) for k = 0..=n.
    pub fn raising(&self, n: usize) -> Result<Vec<CochainVec>, RepError> {
        chain(&self.values, seed(&self.values, false, self.top)?, &e_plus(), n)
    }

    pub fn class(&self) -> CohomologyVector {
        let base = Qi::i_pow(self.w / 2 + if self.top { 1 } else { 0 });
        let terms = (-self.ell..=self.ell)
            .map(|i| ClassTerm {
                label: i,
                coeff: &base * &factorial_inv(self.ell + i),
                cochain: self.lowering[(self.ell + i) as usize].clone(),
            })
            .collect();
        CohomologyVector { kind: if self.top { ClassKind::Top } else { ClassKind::Bottom }, terms }
    }
}

/// (√−1 x + y)^{κ−2} and (x + √−1 y)^{κ−2} in the model of M_λ^∨.
fn gl2_polys(module: &GL2Module, kappa: i64) -> (MultiPoly, MultiPoly) {
    let d = (kappa - 2) as u32;
    let plus = module.linear(Qi::i(), Qi::one()).pow(d);
    let minus = module.linear(Qi::one(), Qi::i()).pow(d);
    (plus, minus)
}

pub fn cohomology_class(kind: ClassKind, params: ClassParams) -> Result<CohomologyVector, RepError> {
    match kind {
        ClassKind::Bottom | ClassKind::Top => {
            Ok(Gl3Class::new(params.ell_or_kappa, params.w, kind == ClassKind::Top)?.class())
        }
        ClassKind::Gl2Plus | ClassKind::Gl2Minus => {
            let kappa = params.ell_or_kappa;
            let lambda = Weight2::holomorphic(kappa, params.w)?;
            let module = GL2Module::new(lambda.dual());
            let (p, q) = gl2_polys(&module, kappa);
            let sign = if kind == ClassKind::Gl2Plus { 1 } else { -1 };
            Ok(CohomologyVector {
                kind,
                terms: vec![
                    ClassTerm { label: 1, coeff: Qi::one(), cochain: CochainVec::simple(&WedgeCochain::y(1), &p) },
                    ClassTerm {
                        label: -1,
                        coeff: &Qi::from_int(sign) * &Qi::i_pow(params.w),
                        cochain: CochainVec::simple(&WedgeCochain::y(-1), &q),
                    },
                ],
            })
        }
    }
}

/// Outcome of comparing (1/(ℓ+i)!) E₋^{ℓ+i}(seed₋) with (1/(ℓ−i)!) E₊^{ℓ−i}(seed₊).
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub ell: i64,
    pub w: i64,
    pub top: bool,
    /// (i, r_i) with lhs_i = r_i · rhs_i exactly.
    pub ratios: Vec<(i64, Qi)>,
    /// (i, (−1)^{i+w/2}).
    pub claimed: Vec<(i64, Qi)>,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.ratios == self.claimed
    }

    /// The common value of r_i / (−1)^{i+w/2}, if it does not depend on i.
    pub fn uniform_correction(&self) -> Option<Qi> {
        let q: Vec<Qi> = self.ratios.iter().zip(&self.claimed).map(|((_, r), (_, c))| r / c).collect();
        if q.windows(2).all(|w| w[0] == w[1]) {
            q.first().cloned()
        } else {
            None
        }
    }
}

fn proportionality(a: &CochainVec, b: &CochainVec) -> Option<Qi> {
    let (k, pb) = b.terms.iter().next()?;
    let pa = a.terms.get(k)?;
    let (e, cb) = pb.terms().next()?;
    let r = &pa.coeff(e) / cb;
    if *a == b.scale(&r) {
        Some(r)
    } else {
        None
    }
}

pub fn check_relation(ell: i64, w: i64, top: bool) -> Result<RelationCheck, RepError> {
    let class = Gl3Class::new(ell, w, top)?;
    let raising = class.raising(2 * ell as usize)?;
    let mut ratios = Vec::new();
    let mut claimed = Vec::new();
    for i in -ell..=ell {
        let lhs = class.lowering[(ell + i) as usize].scale(&factorial_inv(ell + i));
        let rhs = raising[(ell - i) as usize].scale(&factorial_inv(ell - i));
        let r = proportionality(&lhs, &rhs).ok_or_else(|| {
            RepError::IdentityFailed(format!("E₋ and E₊ chains are not proportional at i = {i}"))
        })?;
        ratios.push((i, r));
        claimed.push((i, Qi::sign_pow(i + w / 2)));
    }
    Ok(RelationCheck { ell, w, top, ratios, claimed })
}

/// ⟨ω⊗P, ζ⊗Q⟩ = Σ s(ω, ζ)·⟨P, ι_m(Q)⟩_μ for a GL3 2-cochain and a GL2 1-cochain.
pub fn rs_cochain_pairing(
    gl3: &CochainVec,
    gl2: &CochainVec,
    pairing: &Gl3Pairing,
    hom: &BranchingHom,
) -> Result<Qi, RepError> {
    let mut total = Qi::zero();
    for (idx, p) in &gl3.terms {
        let omega = WedgeCochain::basis(FormSpace::Gl3, idx);
        for (jdx, q) in &gl2.terms {
            let s = pairing_s(&omega, &WedgeCochain::basis(FormSpace::Gl2, jdx))?;
            if s.is_zero() {
                continue;
            }
            total += &(&s * &pairing.eval(p, &hom.apply(q)?)?);
        }
    }
    Ok(total)
}

/// ⟨ω⊗P, η⊗Q⟩_ad = Σ s(ω, η)·⟨P, Q⟩_μ for a GL3 3-cochain in M_{μ^∨} and 2-cochain in M_μ.
pub fn adjoint_cochain_pairing(top: &CochainVec, bottom: &CochainVec, pairing: &Gl3Pairing) -> Result<Qi, RepError> {
    let mut total = Qi::zero();
    for (idx, p) in &top.terms {
        let omega = WedgeCochain::basis(FormSpace::Gl3, idx);
        for (jdx, q) in &bottom.terms {
            let s = pairing_s5(&omega, &WedgeCochain::basis(FormSpace::Gl3, jdx))?;
            if s.is_zero() {
                continue;
            }
            total += &(&s * &pairing.eval(p, q)?);
        }
    }
    Ok(total)
}

/// The representation-theoretic factors of the Rankin–Selberg pairing at a
/// critical point m.
#[derive(Clone, Debug)]
pub struct RsCombinatorial {
    pub ell: i64,
    pub kappa: i64,
    pub w_sigma: i64,
    pub w_pi: i64,
    pub m: i64,
    /// ⟨E₋^{ℓ−κ}(X₋₁*∧X₋₂* ⊗ ρ(h)P⁺), Y₊* ⊗ (√−1x+y)^{κ−2}⟩.
    pub plus: Qi,
    /// ⟨E₊^{ℓ−κ}(X₁*∧X₂* ⊗ ρ(h′)P⁺), Y₋* ⊗ (x+√−1y)^{κ−2}⟩.
    pub minus_raw: Qi,
    /// (√−1)^{w(Π)} · minus_raw.
    pub minus: Qi,
    /// ⟨E₋^{ℓ+κ}(X₋₁*∧X₋₂* ⊗ ρ(h)P⁺), Y₋* ⊗ (x+√−1y)^{κ−2}⟩ / (ℓ+κ)!, the
    /// W⁻ term of the class pairing before any relation is applied.
    pub minus_direct: Qi,
    /// Same as `plus`, through the reduction to E₋^{ℓ−κ−1} on the polynomial
    /// part and the Cayley transform of y^{κ−2}.
    pub plus_reduced: Qi,
    /// Claimed k with plus ∈ (√−1)^k·Q, namely m+(3κ+w(Π))/2.
    pub plus_exponent: i64,
    /// Claimed k with minus ∈ (√−1)^k·Q, namely m+(κ+3w(Π))/2.
    pub minus_exponent: i64,
}

impl RsCombinatorial {
    /// plus / (√−1)^{plus_exponent} if rational.
    pub fn plus_rational(&self) -> Option<BigRational> {
        rational_part(&self.plus, self.plus_exponent)
    }

    pub fn minus_rational(&self) -> Option<BigRational> {
        rational_part(&self.minus, self.minus_exponent)
    }

    /// The k mod 4 with plus ∈ (√−1)^k·Q^×, if any.
    pub fn observed_plus_exponent(&self) -> Option<i64> {
        axis_exponent(&self.plus)
    }

    pub fn observed_minus_exponent(&self) -> Option<i64> {
        axis_exponent(&self.minus)
    }
}

/// k ∈ {0, 1, 2, 3} with z ∈ (√−1)^k·Q_{>0}, for nonzero z on an axis.
pub fn axis_exponent(z: &Qi) -> Option<i64> {
    if z.is_zero() {
        return None;
    }
    (0..4).find(|&k| rational_part(z, k).is_some_and(|q| q > BigRational::from_integer(0.into())))
}

/// z / (√−1)^k when that quotient is rational.
pub fn rational_part(z: &Qi, k: i64) -> Option<BigRational> {
    let q = z * &Qi::i_pow(-k);
    q.is_real().then(|| q.re.clone())
}

pub fn combinatorial_pairing_rs(
    ell: i64,
    kappa: i64,
    w_sigma: i64,
    w_pi: i64,
    m: i64,
) -> Result<RsCombinatorial, RepError> {
    if ell <= kappa {
        return Err(RepError::Parity(format!("need ell > kappa, got ell={ell}, kappa={kappa}")));
    }
    let lambda = Weight2::holomorphic(kappa, w_pi)?;
    let class = Gl3Class::new(ell, w_sigma, false)?;
    let mu = class.mu;
    let hom = branching_hom(lambda, m, mu)?.ok_or(RepError::NonCritical)?;
    let pairing = invariant_pairing_gl3(mu)?;
    let gl2 = GL2Module::new(lambda.dual());
    let (pp, pm) = gl2_polys(&gl2, kappa);
    let yp = CochainVec::simple(&WedgeCochain::y(1), &pp);
    let ym = CochainVec::simple(&WedgeCochain::y(-1), &pm);

    let d = (ell - kappa) as usize;
    let plus = rs_cochain_pairing(&class.lowering[d], &yp, &pairing, &hom)?;
    let raising = class.raising(d)?;
    let minus_raw = rs_cochain_pairing(&raising[d], &ym, &pairing, &hom)?;
    let minus = &minus_raw * &Qi::i_pow(w_pi);
    let minus_direct = &rs_cochain_pairing(&class.lowering[(ell + kappa) as usize], &ym, &pairing, &hom)?
        * &factorial_inv(ell + kappa);

    // Only the X₀*∧X₋₂* component pairs with Y₊*; it arises from one E₋ hitting
    // X₋₁* (coefficient 2, in ℓ−κ positions), so with s(X₀*∧X₋₂*, Y₊*) = 8 and
    // (√−1x+y)^{κ−2} = (−2)^{λ1+m} (√−1)^{m+(3κ+wΠ)/2−3} ρ(c) y^{κ−2}:
    // plus = 16(ℓ−κ)(−2)^{λ1+m}(√−1)^{m+(3κ+wΠ)/2−3} ⟨E₋^{ℓ−κ−1} ρ(h)P⁺, ρ_μ(c) ι_m(y^{κ−2})⟩.
    let values = &class.values;
    let mut p = values.group_act(&h_plus(), values.highest_weight_vector())?;
    for _ in 0..d - 1 {
        p = values.lie_act(&e_minus(), &p)?;
    }
    let y_pow = MultiPoly::monomial(gl2.ring(), vec![0, (kappa - 2) as u32], Qi::one());
    let q = pairing.module.group_act(&h_cayley(), &hom.apply(&y_pow)?)?;
    let scalar = &(&Qi::from_int(16 * (ell - kappa)) * &Qi::from_int(-2).pow(lambda.mu1 + m))
        * &Qi::i_pow(m + (3 * kappa + w_pi) / 2 - 3);
    let plus_reduced = &scalar * &pairing.eval(&p, &q)?;

    Ok(RsCombinatorial {
        ell,
        kappa,
        w_sigma,
        w_pi,
        m,
        plus,
        minus_raw,
        minus,
        minus_direct,
        plus_reduced,
        plus_exponent: m + (3 * kappa + w_pi) / 2,
        minus_exponent: m + (kappa + 3 * w_pi) / 2,
    })
}

/// Action of Ad(h)⁻¹E_± (h the Cayley-type matrix) on M_μ^∨, and whether
/// all its entries are rational. With `conjugate = false` the raw E_± is used.
pub fn rationality_check_ad(mu: Weight3, sign: i64, conjugate: bool) -> Result<(bool, ExactMatrix), RepError> {
    let e = if sign > 0 { e_plus() } else { e_minus() };
    let x = if conjugate {
        let h = h_cayley();
        h.inverse().unwrap().mul(&e).mul(&h)
    } else {
        e
    };
    let m = gl3_module(mu.dual())?.lie_matrix(&x)?;
    Ok((m.is_real(), m))
}

/// Representation-theoretic part of the adjoint pairing B([Σ]_t, [Σ^∨]_b),
/// i.e. everything but ⟨W_0, W_0⟩.
#[derive(Clone, Debug)]
pub struct AdjointCombinatorial {
    pub ell: i64,
    pub w: i64,
    pub mu: Weight3,
    /// ⟨P⁺_{μ^∨}, ρ_μ(antidiag)P⁺_μ⟩_μ.
    pub rep_constant: Qi,
    /// (2ℓ+1)!/(ℓ!)².
    pub factorial_factor: Qi,
    /// (−1)^{w/2}·4·factorial_factor·rep_constant.
    pub closed_form: Qi,
    /// Σ_i √−1 r_i/((ℓ+i)!(ℓ−i)!) ⟨E₋^{ℓ+i}(top seed), E₋^{ℓ−i}(bottom seed of Σ^∨)⟩_ad,
    /// with r_i = ⟨v_i, v_{−i}⟩/⟨v_0, v_0⟩ from the SO(3)-invariant form.
    pub direct: Qi,
}

pub fn combinatorial_pairing_adjoint(ell: i64, w: i64) -> Result<AdjointCombinatorial, RepError> {
    let top = Gl3Class::new(ell, w, true)?;
    let mu = top.mu;
    // Σ^∨ has weight μ^∨ and purity −w; its bottom class takes values in M_μ.
    let bottom = Gl3Class::new(ell, -w, false)?;
    debug_assert_eq!(bottom.mu, mu.dual());
    let pairing = invariant_pairing_gl3(mu)?;

    let module = &pairing.module;
    let rep_constant = pairing.eval(
        pairing.dual.highest_weight_vector(),
        &module.group_act(&antidiag(), module.highest_weight_vector())?,
    )?;
    if rep_constant.is_zero() || !rep_constant.is_real() {
        return Err(RepError::IdentityFailed(format!("⟨P⁺, ρ(antidiag)P⁺⟩ = {rep_constant} is not in Q^×")));
    }
    let l = ell as u64;
    let factorial_factor = Qi::from_rational(BigRational::new(factorial(2 * l + 1), factorial(l).pow(2)));
    let closed_form = &(&Qi::sign_pow(w / 2) * &Qi::from_int(4)) * &(&factorial_factor * &rep_constant);

    let r = so3_invariant_form(ell as u32)?;
    let mut direct = Qi::zero();
    for (i, ri) in r {
        let a = &top.lowering[(ell + i) as usize];
        let b = &bottom.lowering[(ell - i) as usize];
        let v = adjoint_cochain_pairing(a, b, &pairing)?;
        let c = &(&Qi::i() * &ri) * &(&factorial_inv(ell + i) * &factorial_inv(ell - i));
        direct += &(&c * &v);
    }
    Ok(AdjointCombinatorial { ell, w, mu, rep_constant, factorial_factor, closed_form, direct })
}

/// The two constants of the GL2 Poincaré pairing computation.
#[derive(Clone, Debug)]
pub struct PoincareConstants {
    /// ⟨(x+√−1y)^{κ−2}, (√−1x+y)^{κ−2}⟩ + (−1)^{w(Π)}⟨(√−1x+y)^{κ−2}, (x+√−1y)^{κ−2}⟩.
    pub cross_sum: Qi,
    /// ⟨x^{κ−2}, y^{κ−2}⟩.
    pub base: Qi,
    /// Coefficient of Y₊*∧Y₋* against (e11)*∧(e12)*.
    pub volume: Qi,
}

pub fn poincare_constants_gl2(kappa: i64, w_pi: i64) -> Result<PoincareConstants, RepError> {
    let lambda = Weight2::holomorphic(kappa, w_pi)?;
    let pairing = invariant_pairing_gl2(lambda)?;
    let d = (kappa - 2) as u32;
    let (a_dual, b_dual) = gl2_polys(&pairing.dual, kappa);
    let (a, b) = gl2_polys(&pairing.module, kappa);
    // a = (√−1x+y)^{κ−2}, b = (x+√−1y)^{κ−2}
    let cross_sum = &pairing.eval(&b_dual, &a)? + &(&Qi::sign_pow(w_pi) * &pairing.eval(&a_dual, &b)?);
    let xd = MultiPoly::monomial(pairing.dual.ring(), vec![d, 0], Qi::one());
    let yd = MultiPoly::monomial(pairing.module.ring(), vec![0, d], Qi::one());
    let base = pairing.eval(&xd, &yd)?;
    let expected = &Qi::from_int(2).pow(kappa - 1) * &base;
    if cross_sum != expected {
        return Err(RepError::IdentityFailed(format!(
            "cross sum {cross_sum} differs from 2^(κ−1)⟨x^(κ−2), y^(κ−2)⟩ = {expected}"
        )));
    }
    Ok(PoincareConstants { cross_sum, base, volume: gl2_volume_coefficient() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bottom_class_coefficients() {
        let c = cohomology_class(ClassKind::Bottom, ClassParams { ell_or_kappa: 3, w: 0 }).unwrap();
        assert_eq!(c.terms.len(), 7);
        assert_eq!(c.term(3).unwrap().coeff, factorial_inv(6));
        let g = cohomology_class(ClassKind::Gl2Plus, ClassParams { ell_or_kappa: 3, w: 1 }).unwrap();
        assert_eq!(g.terms.len(), 2);
        assert!(cohomology_class(ClassKind::Gl2Plus, ClassParams { ell_or_kappa: 3, w: 0 }).is_err());
        assert!(cohomology_class(ClassKind::Bottom, ClassParams { ell_or_kappa: 4, w: 0 }).is_err());
    }

    #[test]
    fn relation_bottom_degree() {
        for (ell, w) in [(3, 0), (5, 0), (5, 2)] {
            let r = check_relation(ell, w, false).unwrap();
            assert!(r.holds(), "ell={ell} w={w}: {:?}", r.ratios);
        }
    }

    #[test]
    fn rs_constants_frozen() {
        // Regression fixtures from the exact engine (normalizations as documented).
        let c = combinatorial_pairing_rs(5, 3, 0, 1, 0).unwrap();
        assert_eq!((c.plus.clone(), c.minus.clone()), (Qi::from_int(-64), Qi::from_int(64)));
        let c = combinatorial_pairing_rs(5, 3, 0, 1, -1).unwrap();
        assert_eq!((c.plus.clone(), c.minus.clone()), (Qi::gaussian(0, -64), Qi::gaussian(0, -64)));
        assert!(matches!(combinatorial_pairing_rs(5, 3, 0, 1, 3), Err(RepError::NonCritical)));
    }

    #[test]
    fn rs_direct_and_relation_paths_agree() {
        for (ell, kappa, ws, wp, m) in [(5, 3, 0, 1, 0), (5, 3, 0, 1, -1), (5, 2, 0, 0, 0), (7, 4, 2, 0, -1)] {
            let c = combinatorial_pairing_rs(ell, kappa, ws, wp, m).unwrap();
            let via_relation = &(&Qi::sign_pow(kappa + ws / 2) * &factorial_inv(ell - kappa)) * &c.minus_raw;
            assert_eq!(c.minus_direct, via_relation);
            assert_eq!(c.plus, c.plus_reduced);
            // both branches sit one power of √−1 off the claimed exponent
            assert_eq!(c.observed_plus_exponent().map(|k| (k + 1) % 2), Some(c.plus_exponent.rem_euclid(2)));
            assert_eq!(c.observed_minus_exponent().map(|k| (k + 1) % 2), Some(c.minus_exponent.rem_euclid(2)));
            assert!(c.plus_rational().is_none() && c.minus_rational().is_none());
        }
    }

    #[test]
    fn adjoint_closed_form_matches_direct_sum() {
        for (ell, w, expected) in [(3, 0, 560), (5, 0, 11088), (5, 2, 11088)] {
            let a = combinatorial_pairing_adjoint(ell, w).unwrap();
            assert_eq!(a.direct, a.closed_form);
            assert_eq!(a.closed_form, Qi::from_int(expected));
        }
        assert_eq!(combinatorial_pairing_adjoint(5, 0).unwrap().factorial_factor, Qi::from_int(2772));
        assert_eq!(combinatorial_pairing_adjoint(3, 0).unwrap().factorial_factor, Qi::from_int(140));
    }

    #[test]
    fn relation_top_degree() {
        for (ell, w) in [(3, 0), (5, 0), (5, 2)] {
            assert!(check_relation(ell, w, true).unwrap().holds());
        }
    }

    #[test]
    fn poincare() {
        for kappa in 2..=6 {
            let c = poincare_constants_gl2(kappa, kappa % 2).unwrap();
            assert!(!c.base.is_zero());
        }
        let c = poincare_constants_gl2(3, 1).unwrap();
        assert_eq!(c.cross_sum, Qi::from_int(4));
        assert_eq!(c.volume, Qi::gaussian(0, 8));
    }

    #[test]
    fn rationality() {
        for mu in [Weight3::new(1, 0, -1).unwrap(), Weight3::new(2, 0, -2).unwrap()] {
            for s in [1, -1] {
                assert!(rationality_check_ad(mu, s, true).unwrap().0);
            }
        }
        assert!(!rationality_check_ad(Weight3::new(1, 0, -1).unwrap(), 1, false).unwrap().0);
    }
}
