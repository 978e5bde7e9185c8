//! Invariant bilinear pairings M^∨ × M → C, GL2-branching maps into GL3
//! modules, and the wedge pairings s (GL3 × GL2) and s5 (GL3 top degree).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use archi_exact::{ExactMatrix, MultiPoly, Qi};

use crate::gl2::GL2Module;
use crate::gl3::{gl3_module, GL3Module};
use crate::lie::{elementary, gk2_coords, gk3_coords, iota_lie};
use crate::wedge::{FormSpace, WedgeCochain};
use crate::weights::{Weight2, Weight3};
use crate::RepError;

/// Solve for a bilinear form B on A-coordinates × B-coordinates with
/// ⟨X·p, q⟩ + ⟨p, X·q⟩ = 0 for each (X on A, X on B) pair. Only entries
/// with `allowed(a, b)` are unknowns.
fn invariant_form_kernel(
    dim_a: usize,
    dim_b: usize,
    allowed: impl Fn(usize, usize) -> bool,
    gens: &[(ExactMatrix, ExactMatrix)],
) -> Vec<Vec<Qi>> {
    let mut unknown = HashMap::new();
    let mut slots = Vec::new();
    for a in 0..dim_a {
        for b in 0..dim_b {
            if allowed(a, b) {
                unknown.insert((a, b), slots.len());
                slots.push((a, b));
            }
        }
    }
    let mut rows = Vec::new();
    for (ma, mb) in gens {
        for a in 0..dim_a {
            for b in 0..dim_b {
                let mut row = vec![Qi::zero(); slots.len()];
                let mut any = false;
                // Σ_k ma[k][a] B[k][b]
                for k in 0..dim_a {
                    let c = ma.get(k, a);
                    if let (false, Some(&u)) = (c.is_zero(), unknown.get(&(k, b))) {
                        row[u] += c;
                        any = true;
                    }
                }
                // Σ_k mb[k][b] B[a][k]
                for k in 0..dim_b {
                    let c = mb.get(k, b);
                    if let (false, Some(&u)) = (c.is_zero(), unknown.get(&(a, k))) {
                        row[u] += c;
                        any = true;
                    }
                }
                if any && row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..slots.len())
            .map(|j| {
                let mut v = vec![Qi::zero(); slots.len()];
                v[j] = Qi::one();
                v
            })
            .collect()
    } else {
        ExactMatrix::from_rows(rows).kernel()
    };
    kernel
        .into_iter()
        .map(|v| {
            let mut full = vec![Qi::zero(); dim_a * dim_b];
            for (u, &(a, b)) in slots.iter().enumerate() {
                full[a * dim_b + b] = v[u].clone();
            }
            full
        })
        .collect()
}

fn to_matrix(flat: &[Qi], rows: usize, cols: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, flat[r * cols + c].clone());
        }
    }
    m
}

fn bilinear(b: &ExactMatrix, p: &[Qi], q: &[Qi]) -> Qi {
    let bq = b.mul_vec(q);
    p.iter().zip(&bq).map(|(x, y)| x * y).sum()
}

/// The GL3(C)-invariant pairing ⟨·,·⟩_μ : M_{μ^∨} × M_μ → C, normalized by
/// ⟨P^+_{μ^∨}, lowest weight vector of M_μ⟩ = 1.
#[derive(Clone, Debug)]
pub struct Gl3Pairing {
    pub weight: Weight3,
    pub dual: Arc<GL3Module>,
    pub module: Arc<GL3Module>,
    /// B[a][b] = ⟨dual basis a, module basis b⟩.
    pub matrix: ExactMatrix,
}

impl Gl3Pairing {
    pub fn eval(&self, p: &MultiPoly, q: &MultiPoly) -> Result<Qi, RepError> {
        Ok(bilinear(&self.matrix, &self.dual.coords(p)?, &self.module.coords(q)?))
    }
}

fn gl3_generators() -> [ExactMatrix; 4] {
    [elementary(3, 1, 2), elementary(3, 2, 1), elementary(3, 2, 3), elementary(3, 3, 2)]
}

fn build_gl3_pairing(weight: Weight3) -> Result<Gl3Pairing, RepError> {
    let dual = gl3_module(weight.dual())?;
    let module = gl3_module(weight)?;
    let gens = gl3_generators()
        .iter()
        .map(|x| Ok((dual.lie_matrix(x)?, module.lie_matrix(x)?)))
        .collect::<Result<Vec<_>, RepError>>()?;
    let (da, db) = (dual.dim(), module.dim());
    let ker = invariant_form_kernel(
        da,
        db,
        |a, b| {
            let (u, v) = (dual.basis_weight(a), module.basis_weight(b));
            (0..3).all(|k| u[k] + v[k] == 0)
        },
        &gens,
    );
    if ker.len() != 1 {
        return Err(RepError::KernelDimension { expected: 1, found: ker.len() });
    }
    let mut matrix = to_matrix(&ker[0], da, db);
    let norm = matrix.get(0, module.lowest_weight_index()).clone();
    let inv = norm
        .inv()
        .ok_or_else(|| RepError::Internal("pairing vanishes on extreme weights".into()))?;
    matrix = matrix.scale(&inv);
    Ok(Gl3Pairing { weight, dual, module, matrix })
}

pub fn invariant_pairing_gl3(weight: Weight3) -> Result<Arc<Gl3Pairing>, RepError> {
    static CACHE: OnceLock<Mutex<HashMap<Weight3, Arc<Gl3Pairing>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&weight) {
        return Ok(p.clone());
    }
    let built = Arc::new(build_gl3_pairing(weight)?);
    Ok(cache.lock().unwrap().entry(weight).or_insert(built).clone())
}

/// ⟨·,·⟩_λ : M_{λ^∨} × M_λ → C normalized by ⟨x^d, y^d⟩ = 1.
#[derive(Clone, Debug)]
pub struct Gl2Pairing {
    pub weight: Weight2,
    pub dual: GL2Module,
    pub module: GL2Module,
    pub matrix: ExactMatrix,
}

impl Gl2Pairing {
    pub fn eval(&self, p: &MultiPoly, q: &MultiPoly) -> Result<Qi, RepError> {
        Ok(bilinear(&self.matrix, &self.dual.coords(p)?, &self.module.coords(q)?))
    }
}

pub fn invariant_pairing_gl2(weight: Weight2) -> Result<Gl2Pairing, RepError> {
    let dual = GL2Module::new(weight.dual());
    let module = GL2Module::new(weight);
    let gens: Vec<_> = [elementary(2, 1, 2), elementary(2, 2, 1)]
        .iter()
        .map(|x| (dual.lie_matrix(x), module.lie_matrix(x)))
        .collect();
    let (da, db) = (dual.dim(), module.dim());
    let ker = invariant_form_kernel(
        da,
        db,
        |a, b| {
            let (u, v) = (dual.basis_weight(a), module.basis_weight(b));
            u[0] + v[0] == 0 && u[1] + v[1] == 0
        },
        &gens,
    );
    if ker.len() != 1 {
        return Err(RepError::KernelDimension { expected: 1, found: ker.len() });
    }
    let m = to_matrix(&ker[0], da, db);
    let norm = m.get(0, db - 1).inv().ok_or_else(|| RepError::Internal("⟨x^d, y^d⟩ = 0".into()))?;
    Ok(Gl2Pairing { weight, dual, module, matrix: m.scale(&norm) })
}

/// A nonzero element of Hom_GL2(M_ν, M_μ|_ι), ν = (λ+m)^∨.
#[derive(Clone, Debug)]
pub struct BranchingHom {
    pub source: GL2Module,
    pub target: Arc<GL3Module>,
    /// Column b = image of source basis b in target coordinates.
    pub matrix: ExactMatrix,
}

impl BranchingHom {
    pub fn apply(&self, q: &MultiPoly) -> Result<MultiPoly, RepError> {
        let c = self.source.coords(q)?;
        Ok(self.target.from_coords(&self.matrix.mul_vec(&c)))
    }
}

/// Hom_GL2(M_{λ+m}^∨, M_μ) through ι(g) = diag(g, 1): None when zero,
/// otherwise the map with first nonzero entry (column-major) equal to 1.
pub fn branching_hom(lambda: Weight2, m: i64, mu: Weight3) -> Result<Option<BranchingHom>, RepError> {
    let nu = lambda.shift(m).dual();
    let source = GL2Module::new(nu);
    let target = gl3_module(mu)?;
    let (ds, dt) = (source.dim(), target.dim());
    let mut slots = Vec::new();
    for b in 0..ds {
        for a in 0..dt {
            let (wt, ws) = (target.basis_weight(a), source.basis_weight(b));
            if wt[0] == ws[0] && wt[1] == ws[1] {
                slots.push((a, b));
            }
        }
    }
    if slots.is_empty() {
        return Ok(None);
    }
    let index: HashMap<(usize, usize), usize> = slots.iter().enumerate().map(|(u, &s)| (s, u)).collect();
    let mut rows = Vec::new();
    for x in [elementary(2, 1, 2), elementary(2, 2, 1)] {
        let ms = source.lie_matrix(&x);
        let mt = target.lie_matrix(&iota_lie(&x))?;
        // (T·ms − mt·T)[a][b] = 0
        for a in 0..dt {
            for b in 0..ds {
                let mut row = vec![Qi::zero(); slots.len()];
                for k in 0..ds {
                    if let Some(&u) = index.get(&(a, k)) {
                        row[u] += ms.get(k, b);
                    }
                }
                for k in 0..dt {
                    if let Some(&u) = index.get(&(k, b)) {
                        row[u] -= mt.get(a, k);
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let ker = if rows.is_empty() {
        (0..slots.len())
            .map(|j| {
                let mut v = vec![Qi::zero(); slots.len()];
                v[j] = Qi::one();
                v
            })
            .collect()
    } else {
        ExactMatrix::from_rows(rows).kernel()
    };
    match ker.len() {
        0 => Ok(None),
        1 => {
            let v = &ker[0];
            // slots are already in column-major order
            let lead = v.iter().find(|x| !x.is_zero()).unwrap().inv().unwrap();
            let mut matrix = ExactMatrix::zeros(dt, ds);
            for (u, &(a, b)) in slots.iter().enumerate() {
                matrix.set(a, b, &v[u] * &lead);
            }
            Ok(Some(BranchingHom { source, target, matrix }))
        }
        n => Err(RepError::KernelDimension { expected: 1, found: n }),
    }
}

/// Integers m in [lo, hi] with Hom_GL2(M_{λ+m}^∨, M_μ) ≠ 0.
pub fn critical_range(lambda: Weight2, mu: Weight3, lo: i64, hi: i64) -> Result<Vec<i64>, RepError> {
    let mut out = Vec::new();
    for m in lo..=hi {
        if branching_hom(lambda, m, mu)?.is_some() {
            out.push(m);
        }
    }
    Ok(out)
}

/// Overall scale of the wedge pairings, fixed so that the four reference
/// values s(X₀*∧X₋₂*, Y₊*) = 8, s(X₀*∧X₂*, Y₋*) = −8,
/// s(X₀*∧X₋₁*∧X₋₂*, X₁*∧X₂*) = −4√−1 and Y₊*∧Y₋* = 8√−1·(e11)*∧(e12)*
/// all hold.
fn wedge_scale() -> Qi {
    Qi::from_int(-64)
}

fn gl2_reference() -> [ExactMatrix; 3] {
    [ExactMatrix::identity(2), elementary(2, 1, 1), elementary(2, 1, 2)]
}

fn gl3_reference() -> [ExactMatrix; 5] {
    let mut b = elementary(3, 1, 1);
    b.set(1, 1, Qi::one());
    [elementary(3, 1, 1), b, elementary(3, 1, 2), elementary(3, 1, 3), elementary(3, 2, 3)]
}

/// s(ω, ζ) for ω ∈ ⋀²(g3/k3)*, ζ ∈ (g2/k2)*.
pub fn pairing_s(omega: &WedgeCochain, zeta: &WedgeCochain) -> Result<Qi, RepError> {
    if omega.space != FormSpace::Gl3 || omega.degree != 2 || zeta.space != FormSpace::Gl2 || zeta.degree != 1 {
        return Err(RepError::Internal("pairing_s expects a GL3 2-form and a GL2 1-form".into()));
    }
    let refs = gl2_reference();
    let up: Vec<[Qi; 5]> = refs.iter().map(|b| gk3_coords(&iota_lie(b))).collect();
    let down: Vec<[Qi; 2]> = refs.iter().map(gk2_coords).collect();
    let mut total = Qi::zero();
    for (idx, c) in &omega.terms {
        for (jdx, d) in &zeta.terms {
            let rows = vec![
                up.iter().map(|u| u[idx[0] as usize].clone()).collect(),
                up.iter().map(|u| u[idx[1] as usize].clone()).collect(),
                down.iter().map(|v| v[jdx[0] as usize].clone()).collect(),
            ];
            total += &(&(c * d) * &ExactMatrix::from_rows(rows).det());
        }
    }
    Ok(&total * &wedge_scale())
}

/// s(ω, η) for ω ∈ ⋀³(g3/k3)*, η ∈ ⋀²(g3/k3)*.
pub fn pairing_s5(omega: &WedgeCochain, eta: &WedgeCochain) -> Result<Qi, RepError> {
    if omega.space != FormSpace::Gl3 || eta.space != FormSpace::Gl3 || omega.degree != 3 || eta.degree != 2 {
        return Err(RepError::Internal("pairing_s5 expects GL3 forms of degrees 3 and 2".into()));
    }
    let coords: Vec<[Qi; 5]> = gl3_reference().iter().map(gk3_coords).collect();
    let top = omega.wedge(eta);
    let mut total = Qi::zero();
    for (idx, c) in &top.terms {
        let rows = idx
            .iter()
            .map(|&k| coords.iter().map(|v| v[k as usize].clone()).collect())
            .collect();
        total += &(c * &ExactMatrix::from_rows(rows).det());
    }
    Ok(&total * &wedge_scale())
}

/// Coefficient c with Y₊*∧Y₋* = c·(e11)*∧(e12)* on g2/k2.
pub fn gl2_volume_coefficient() -> Qi {
    let refs = [elementary(2, 1, 1), elementary(2, 1, 2)];
    let c: Vec<[Qi; 2]> = refs.iter().map(gk2_coords).collect();
    let m = ExactMatrix::from_rows(vec![
        c.iter().map(|v| v[0].clone()).collect(),
        c.iter().map(|v| v[1].clone()).collect(),
    ]);
    &m.det() * &wedge_scale()
}
