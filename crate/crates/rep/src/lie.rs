//! Named elements of gl3 / gl2 and coordinates on g/k.

use std::sync::OnceLock;

use archi_exact::{ExactMatrix, Qi};

fn m3(rows: [[Qi; 3]; 3]) -> ExactMatrix {
    ExactMatrix::from_rows(rows.into_iter().map(|r| r.to_vec()).collect())
}

fn z() -> Qi {
    Qi::zero()
}

fn n(k: i64) -> Qi {
    Qi::from_int(k)
}

fn gi(a: i64, b: i64) -> Qi {
    Qi::gaussian(a, b)
}

/// Elementary matrix e_{jk} (1-based indices) of size `dim`.
pub fn elementary(dim: usize, j: usize, k: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(dim, dim);
    m.set(j - 1, k - 1, Qi::one());
    m
}

pub fn commutator(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.mul(b).sub(&b.mul(a))
}

pub fn trace(a: &ExactMatrix) -> Qi {
    (0..a.rows()).map(|i| a.get(i, i).clone()).sum()
}

/// The so(3) element with E12·v_i = √−1·i·v_i.
pub fn e12() -> ExactMatrix {
    m3([[z(), n(1), z()], [n(-1), z(), z()], [z(), z(), z()]])
}

/// E_± = ±√−1 (e23 − e32) + (e13 − e31).
pub fn e_pm(sign: i64) -> ExactMatrix {
    m3([
        [z(), z(), n(1)],
        [z(), z(), gi(0, sign)],
        [n(-1), gi(0, -sign), z()],
    ])
}

pub fn e_plus() -> ExactMatrix {
    e_pm(1)
}

pub fn e_minus() -> ExactMatrix {
    e_pm(-1)
}

/// Basis X_2, …, X_{−2} of g3/k3 (as symmetric representatives).
pub fn x_basis(i: i32) -> ExactMatrix {
    let h = Qi::from_ratio(1, 2);
    let hi = Qi::new(archi_exact::rat(0, 1), archi_exact::rat(1, 2));
    match i {
        2 | -2 => {
            let s = if i > 0 { -1 } else { 1 };
            m3([[gi(0, 1), n(s), z()], [n(s), gi(0, -1), z()], [z(), z(), z()]])
        }
        0 => {
            let t = Qi::new(archi_exact::rat(0, 1), archi_exact::rat(1, 3));
            m3([[-t.clone(), z(), z()], [z(), -t.clone(), z()], [z(), z(), &t * &n(2)]])
        }
        1 | -1 => {
            let s = if i > 0 { hi.clone() } else { -hi.clone() };
            m3([[z(), z(), s.clone()], [z(), z(), -h.clone()], [s, -h, z()]])
        }
        _ => panic!("X_{i} is not a basis element"),
    }
}

/// Y_± = √−1 diag(1,−1) ± (−e12 − e21).
pub fn y_basis(sign: i64) -> ExactMatrix {
    ExactMatrix::from_rows(vec![vec![gi(0, 1), n(-sign)], vec![n(-sign), gi(0, -1)]])
}

/// h = [[1,0,1],[i,0,−i],[0,1,0]] used to build the SO(2)-highest vector.
pub fn h_plus() -> ExactMatrix {
    m3([[n(1), z(), n(1)], [gi(0, 1), z(), gi(0, -1)], [z(), n(1), z()]])
}

/// h' = [[−1,0,−1],[i,0,−i],[0,1,0]].
pub fn h_minus() -> ExactMatrix {
    m3([[n(-1), z(), n(-1)], [gi(0, 1), z(), gi(0, -1)], [z(), n(1), z()]])
}

/// [[1,1,0],[i,−i,0],[0,0,1]], the Cayley-type matrix conjugating E_± to a rational form.
pub fn h_cayley() -> ExactMatrix {
    m3([[n(1), n(1), z()], [gi(0, 1), gi(0, -1), z()], [z(), z(), n(1)]])
}

/// [[0,0,−1],[0,1,0],[−1,0,0]].
pub fn antidiag() -> ExactMatrix {
    m3([[z(), z(), n(-1)], [z(), n(1), z()], [n(-1), z(), z()]])
}

pub fn diag3(a: i64, b: i64, c: i64) -> ExactMatrix {
    m3([[n(a), z(), z()], [z(), n(b), z()], [z(), z(), n(c)]])
}

/// Block embedding g ↦ diag(g, 1).
pub fn iota(g: &ExactMatrix) -> ExactMatrix {
    let mut m = ExactMatrix::identity(3);
    for i in 0..2 {
        for j in 0..2 {
            m.set(i, j, g.get(i, j).clone());
        }
    }
    m
}

/// Lie algebra embedding X ↦ diag(X, 0).
pub fn iota_lie(x: &ExactMatrix) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(3, 3);
    for i in 0..2 {
        for j in 0..2 {
            m.set(i, j, x.get(i, j).clone());
        }
    }
    m
}

/// Traceless symmetric part (Z + Zᵀ)/2 − tr(Z)/n, the projection killing so(n) and the centre.
fn sym_traceless(zm: &ExactMatrix) -> ExactMatrix {
    let n = zm.rows();
    let half = Qi::from_ratio(1, 2);
    let s = zm.add(&zm.transpose()).scale(&half);
    let t = &trace(zm) * &Qi::from_ratio(1, n as i64);
    s.sub(&ExactMatrix::identity(n).scale(&t))
}

fn flatten(m: &ExactMatrix) -> Vec<Qi> {
    m.entries().to_vec()
}

fn basis_solver(basis: &[ExactMatrix]) -> ExactMatrix {
    let rows = basis[0].rows() * basis[0].cols();
    let mut a = ExactMatrix::zeros(rows, basis.len());
    for (j, b) in basis.iter().enumerate() {
        for (r, v) in flatten(b).into_iter().enumerate() {
            a.set(r, j, v);
        }
    }
    a
}

/// Coordinates of Z mod k3 in the basis (X_2, X_1, X_0, X_{−1}, X_{−2}).
pub fn gk3_coords(zm: &ExactMatrix) -> [Qi; 5] {
    static A: OnceLock<ExactMatrix> = OnceLock::new();
    let a = A.get_or_init(|| basis_solver(&X_ORDER.map(x_basis)));
    let c = a
        .solve(&flatten(&sym_traceless(zm)))
        .expect("g3/k3 basis must span the traceless symmetric matrices");
    c.try_into().unwrap()
}

/// Coordinates of Z mod k2 in the basis (Y_+, Y_−).
pub fn gk2_coords(zm: &ExactMatrix) -> [Qi; 2] {
    static A: OnceLock<ExactMatrix> = OnceLock::new();
    let a = A.get_or_init(|| basis_solver(&[y_basis(1), y_basis(-1)]));
    let c = a
        .solve(&flatten(&sym_traceless(zm)))
        .expect("g2/k2 basis must span the traceless symmetric matrices");
    c.try_into().unwrap()
}

/// Coordinates of Z mod so(2) in the basis (1_2, e11, e12).
pub fn g2_so2_coords(zm: &ExactMatrix) -> [Qi; 3] {
    let (a, b, c, d) = (zm.get(0, 0), zm.get(0, 1), zm.get(1, 0), zm.get(1, 1));
    [d.clone(), a - d, b + c]
}

/// Index order of the X basis inside 5-vectors.
pub const X_ORDER: [i32; 5] = [2, 1, 0, -1, -2];

pub fn x_pos(i: i32) -> usize {
    (2 - i) as usize
}

/// Matrix of ad(E) on g3/k3: column m holds the coordinates of [E, X_m].
pub fn ad_matrix_gk3(e: &ExactMatrix) -> ExactMatrix {
    let mut a = ExactMatrix::zeros(5, 5);
    for (m, &i) in X_ORDER.iter().enumerate() {
        let c = gk3_coords(&commutator(e, &x_basis(i)));
        for (k, v) in c.into_iter().enumerate() {
            a.set(k, m, v);
        }
    }
    a
}

/// Matrix of Ad(g) on g3/k3 (g must normalize k3, e.g. g orthogonal).
pub fn big_ad_matrix_gk3(g: &ExactMatrix) -> ExactMatrix {
    let gi = g.inverse().expect("singular group element");
    let mut a = ExactMatrix::zeros(5, 5);
    for (m, &i) in X_ORDER.iter().enumerate() {
        let c = gk3_coords(&g.mul(&x_basis(i)).mul(&gi));
        for (k, v) in c.into_iter().enumerate() {
            a.set(k, m, v);
        }
    }
    a
}

/// Matrix of Ad(g) on g2/k2 in the (Y_+, Y_−) basis.
pub fn big_ad_matrix_gk2(g: &ExactMatrix) -> ExactMatrix {
    let gi = g.inverse().expect("singular group element");
    let mut a = ExactMatrix::zeros(2, 2);
    for (m, s) in [1, -1].into_iter().enumerate() {
        let c = gk2_coords(&g.mul(&y_basis(s)).mul(&gi));
        for (k, v) in c.into_iter().enumerate() {
            a.set(k, m, v);
        }
    }
    a
}

/// A Lie algebra element named the way the constructions refer to them.
#[derive(Clone, Debug)]
pub enum LieElement {
    EPlus,
    EMinus,
    E12,
    /// e_{jk}, 1-based.
    Elementary(usize, usize),
    X(i32),
    Matrix(ExactMatrix),
}

impl LieElement {
    pub fn matrix(&self, dim: usize) -> ExactMatrix {
        let m = match self {
            LieElement::EPlus => e_plus(),
            LieElement::EMinus => e_minus(),
            LieElement::E12 => e12(),
            LieElement::Elementary(j, k) => elementary(dim, *j, *k),
            LieElement::X(i) => x_basis(*i),
            LieElement::Matrix(m) => m.clone(),
        };
        assert_eq!(m.rows(), dim, "Lie element of the wrong size");
        m
    }
}
