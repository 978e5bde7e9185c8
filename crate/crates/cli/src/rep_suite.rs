//! The exact representation-theory suite behind `verify rep`.

use std::sync::Arc;

use archi_exact::{MultiPoly, Qi};
use archi_rep::classes::{check_relation, poincare_constants_gl2, rationality_check_ad};
use archi_rep::gl3::gl3_module;
use archi_rep::lie::{commutator, e12, e_minus, e_plus, elementary};
use archi_rep::pairing::{critical_range, gl2_volume_coefficient, pairing_s, pairing_s5};
use archi_rep::so3::{so3_invariant_vector, SO3Module};
use archi_rep::wedge::WedgeCochain;
use archi_rep::weights::{Weight2, Weight3};
use archi_zeta::{critical_set, RsParams, Verdict, REPORT_VERSION};
use serde::Serialize;
use serde_json::{json, Value};

/// Weights (ℓ, κ, w_Σ, w_Π) for the criticality comparison.
pub const CRITICALITY_WEIGHTS: [(u32, u32, i64, i64); 5] = [(5, 3, 0, 1), (7, 3, 0, 1), (7, 5, 0, 1), (5, 2, 0, 0), (7, 4, 2, 0)];

/// Range of m for the criticality comparison.
pub const CRITICALITY_M: i64 = 6;

/// One exact check. Exact checks have no numeric deviation, only a verdict.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub version: u32,
    pub check: String,
    pub params: Value,
    pub verdict: Verdict,
    pub detail: Value,
}

impl CheckRecord {
    pub fn run(check: &str, params: Value, f: impl FnOnce() -> Result<Value, String>) -> Self {
        let (verdict, detail) = match f() {
            Ok(d) => (Verdict::Pass, d),
            Err(e) => (Verdict::Fail, json!({ "failure": e })),
        };
        Self { version: REPORT_VERSION, check: check.to_string(), params, verdict, detail }
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn expect_eq(what: &str, got: &Qi, want: &Qi) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

/// E12 v_i = √−1·i·v_i, E₊ v_i = (ℓ−i)v_{i+1}, E₋ v_i = (−ℓ−i)v_{i−1}.
fn ladder(ell: u32) -> Result<Value, String> {
    let m = SO3Module::new(ell);
    let l = ell as i64;
    for i in -l..=l {
        let v = m.v(i).clone();
        let zero = MultiPoly::zero(m.ring());
        let up = if i < l { m.v(i + 1).scale(&Qi::from_int(l - i)) } else { zero.clone() };
        let down = if i > -l { m.v(i - 1).scale(&Qi::from_int(-l - i)) } else { zero };
        let cases = [(e12(), v.scale(&Qi::gaussian(0, i)), "E12"), (e_plus(), up, "E+"), (e_minus(), down, "E-")];
        for (x, want, name) in cases {
            if m.lie_act(&x, &v).map_err(err)? != want {
                return Err(format!("{name} v_{i} differs from the ladder formula"));
            }
        }
    }
    Ok(json!({ "vectors": 2 * l + 1 }))
}

/// ρ is a Lie algebra map on the root vectors, and the highest weight vector
/// is killed by the raising operators.
fn gl3_closure(mu: Weight3, corrupt: bool) -> Result<Value, String> {
    let module = gl3_module(mu).map_err(err)?;
    let module = if corrupt { Arc::new(module.corrupted()) } else { module };
    let roots: Vec<_> = [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)].iter().map(|&(j, k)| elementary(3, j, k)).collect();
    let images = roots.iter().map(|x| module.lie_matrix(x)).collect::<Result<Vec<_>, _>>().map_err(err)?;
    for (a, (x, rx)) in roots.iter().zip(&images).enumerate() {
        for (b, (y, ry)) in roots.iter().zip(&images).enumerate().skip(a + 1) {
            let lhs = module.lie_matrix(&commutator(x, y)).map_err(err)?;
            if lhs != rx.mul(ry).sub(&ry.mul(rx)) {
                return Err(format!("ρ([X{a}, X{b}]) ≠ [ρX{a}, ρX{b}]"));
            }
        }
    }
    for x in &roots[..] {
        let is_raising = (0..3).any(|j| (0..3).any(|k| j < k && !x.get(j, k).is_zero()));
        if is_raising && !module.lie_act(x, module.highest_weight_vector()).map_err(err)?.is_zero() {
            return Err("highest weight vector not killed by a raising operator".into());
        }
    }
    Ok(json!({ "dim": module.dim() }))
}

fn anchors() -> Vec<CheckRecord> {
    let y = WedgeCochain::y;
    let x = WedgeCochain::x;
    let cases = [
        ("s(X0*∧X-2*, Y+*)", pairing_s(&x(&[0, -2]), &y(1)), Qi::from_int(8)),
        ("s(X0*∧X2*, Y-*)", pairing_s(&x(&[0, 2]), &y(-1)), Qi::from_int(-8)),
        ("s5(X0*∧X-1*∧X-2*, X1*∧X2*)", pairing_s5(&x(&[0, -1, -2]), &x(&[1, 2])), Qi::gaussian(0, -4)),
    ];
    cases
        .into_iter()
        .map(|(name, got, want)| {
            CheckRecord::run("pairing_anchor", json!({ "pairing": name, "expected": want.to_string() }), || {
                let got = got.map_err(err)?;
                expect_eq(name, &got, &want)?;
                Ok(json!({ "value": got.to_string() }))
            })
        })
        .collect()
}

fn criticality(ell: u32, kappa: u32, w_sigma: i64, w_pi: i64) -> Result<Value, String> {
    let params = RsParams { ell, kappa, w_sigma, w_pi };
    let regular = critical_set(&params, -CRITICALITY_M, CRITICALITY_M);
    let lambda = Weight2::holomorphic(kappa as i64, w_pi).map_err(err)?;
    let mu = Weight3::cohomological(ell as i64, w_sigma).map_err(err)?;
    let hom = critical_range(lambda, mu, -CRITICALITY_M, CRITICALITY_M).map_err(err)?;
    if regular != hom {
        return Err(format!("regular points {regular:?}, nonzero branching at {hom:?}"));
    }
    Ok(json!({ "critical": regular }))
}

/// Every exact check for weights ℓ ≤ `max_ell`.
pub fn rep_suite(max_ell: u32, corrupt: bool) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for ell in 0..=max_ell {
        out.push(CheckRecord::run("so3_ladder", json!({ "ell": ell }), || ladder(ell)));
    }
    for ell in 0..=max_ell {
        out.push(CheckRecord::run("so3_invariant_vector", json!({ "ell": ell }), || {
            let v = so3_invariant_vector(ell).map_err(err)?;
            Ok(json!({ "terms": v.coeffs.len() }))
        }));
    }
    // (1,0,−1) is always included: for ℓ = 3 every cohomological weight is one-dimensional
    let mut weights = vec![[1, 0, -1]];
    for ell in (3..=max_ell as i64).step_by(2) {
        if let Ok(mu) = Weight3::cohomological(ell, 0) {
            if !weights.contains(&mu.as_array()) {
                weights.push(mu.as_array());
            }
        }
    }
    for [a, b, c] in weights {
        out.push(CheckRecord::run("gl3_lie_closure", json!({ "weight": [a, b, c], "corrupted": corrupt }), || {
            gl3_closure(Weight3::new(a, b, c).map_err(err)?, corrupt)
        }));
    }
    for (ell, w) in [(3u32, 0i64), (5, 0), (5, 2)] {
        if ell > max_ell {
            continue;
        }
        for top in [false, true] {
            out.push(CheckRecord::run("gl3_relation", json!({ "ell": ell, "w": w, "top": top }), || {
                let r = check_relation(ell as i64, w, top).map_err(err)?;
                let ratios: Vec<String> = r.ratios.iter().map(|(_, q)| q.to_string()).collect();
                if r.holds() {
                    Ok(json!({ "ratios": ratios }))
                } else {
                    Err(format!("ratios {ratios:?} differ from (−1)^(i+w/2)"))
                }
            }));
        }
    }
    for ell in [3u32, 5, 7].into_iter().filter(|&l| l <= max_ell) {
        for w in [-2i64, 0, 2] {
            for sign in [1i64, -1] {
                out.push(CheckRecord::run("conjugated_ladder_rational", json!({ "ell": ell, "w": w, "sign": sign }), || {
                    let mu = Weight3::cohomological(ell as i64, w).map_err(err)?;
                    let (rational, m) = rationality_check_ad(mu, sign, true).map_err(err)?;
                    let (raw_rational, _) = rationality_check_ad(mu, sign, false).map_err(err)?;
                    if rational {
                        Ok(json!({ "dim": m.rows(), "unconjugated_rational": raw_rational }))
                    } else {
                        Err("Ad(h)⁻¹E± has a non-rational matrix entry".into())
                    }
                }));
            }
        }
    }
    for kappa in 2i64..=6 {
        let w_pi = kappa % 2;
        out.push(CheckRecord::run("gl2_poincare_identity", json!({ "kappa": kappa, "w_pi": w_pi }), || {
            let c = poincare_constants_gl2(kappa, w_pi).map_err(err)?;
            Ok(json!({ "cross_sum": c.cross_sum.to_string(), "base": c.base.to_string() }))
        }));
    }
    out.push(CheckRecord::run("gl2_volume_coefficient", json!({}), || {
        let v = gl2_volume_coefficient();
        expect_eq("Y+*∧Y-*", &v, &Qi::gaussian(0, 8))?;
        Ok(json!({ "value": v.to_string() }))
    }));
    out.extend(anchors());
    for (ell, kappa, w_sigma, w_pi) in CRITICALITY_WEIGHTS {
        if ell <= max_ell {
            let params = json!({ "ell": ell, "kappa": kappa, "w_sigma": w_sigma, "w_pi": w_pi, "m_range": [-CRITICALITY_M, CRITICALITY_M] });
            out.push(CheckRecord::run("criticality", params, || criticality(ell, kappa, w_sigma, w_pi)));
        }
    }
    out
}
