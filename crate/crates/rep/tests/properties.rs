use archi_exact::{ExactMatrix, MultiPoly, Qi};
use archi_rep::classes::rationality_check_ad;
use archi_rep::gl2::GL2Module;
use archi_rep::gl3::gl3_module;
use archi_rep::lie::{e12, e_minus, e_plus, iota};
use archi_rep::pairing::{branching_hom, invariant_pairing_gl2, invariant_pairing_gl3, pairing_s, pairing_s5};
use archi_rep::so3::SO3Module;
use archi_rep::wedge::{dual_group_matrix_gk2, dual_group_matrix_gk3, FormSpace, WedgeCochain};
use archi_rep::weights::{Weight2, Weight3};
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 24, ..ProptestConfig::default() }
}

fn small_matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec((-2i64..=2, -1i64..=1), n * n)
        .prop_map(move |v| {
            let rows = v.chunks(n).map(|r| r.iter().map(|&(a, b)| Qi::gaussian(a, b)).collect()).collect();
            ExactMatrix::from_rows(rows)
        })
        .prop_filter("invertible", |m| !m.det().is_zero())
}

fn weight3() -> impl Strategy<Value = Weight3> {
    (0i64..=2, 0i64..=2, -1i64..=1).prop_map(|(a, b, c)| Weight3::new(c + a + b, c + b, c).unwrap())
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<Qi>> {
    prop::collection::vec((-3i64..=3, -3i64..=3), n).prop_map(|v| v.into_iter().map(|(a, b)| Qi::gaussian(a, b)).collect())
}

/// Signed permutation matrices of determinant one.
fn rotation3() -> impl Strategy<Value = ExactMatrix> {
    (0usize..6, 0usize..4).prop_map(|(p, s)| {
        let perms = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let perm = perms[p];
        let mut signs = [1i64, if s & 1 == 1 { -1 } else { 1 }, if s & 2 == 2 { -1 } else { 1 }];
        if p >= 3 {
            signs[0] = -1;
        }
        let mut m = ExactMatrix::zeros(3, 3);
        for i in 0..3 {
            m.set(i, perm[i], Qi::from_int(signs[i]));
        }
        if m.det() != Qi::one() {
            m = m.scale(&Qi::from_int(-1));
        }
        m
    })
}

fn rotation2() -> impl Strategy<Value = ExactMatrix> {
    (0usize..4).prop_map(|k| {
        let (c, s) = [(1, 0), (0, 1), (-1, 0), (0, -1)][k];
        ExactMatrix::from_rows(vec![
            vec![Qi::from_int(c), Qi::from_int(-s)],
            vec![Qi::from_int(s), Qi::from_int(c)],
        ])
    })
}

/// Generic q-form on a space of dimension n with the given coefficients on
/// the sorted index tuples, in lexicographic order.
fn form(c: &[Qi], n: u8, degree: usize) -> WedgeCochain {
    fn tuples(start: u8, k: usize, n: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..n {
            cur.push(j);
            tuples(j + 1, k, n, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    tuples(0, degree, n, &mut Vec::new(), &mut all);
    let space = if n == 5 { FormSpace::Gl3 } else { FormSpace::Gl2 };
    let mut w = WedgeCochain::zero(space, degree);
    for (t, x) in all.into_iter().zip(c) {
        w.add_term(t, x);
    }
    w
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn gl3_action_is_multiplicative(mu in weight3(), g in small_matrix(3), h in small_matrix(3), c in coeffs(6)) {
        let m = gl3_module(mu).unwrap();
        let p = m.from_coords(&c[..m.dim().min(6)].iter().cloned().chain(std::iter::repeat(Qi::zero())).take(m.dim()).collect::<Vec<_>>());
        let lhs = m.group_act(&g.mul(&h), &p).unwrap();
        let rhs = m.group_act(&g, &m.group_act(&h, &p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gl3_pairing_is_invariant(mu in weight3(), g in small_matrix(3), a in coeffs(6), b in coeffs(6)) {
        let pairing = invariant_pairing_gl3(mu).unwrap();
        let pad = |c: &[Qi], n: usize| c.iter().cloned().chain(std::iter::repeat(Qi::zero())).take(n).collect::<Vec<_>>();
        let p = pairing.dual.from_coords(&pad(&a, pairing.dual.dim()));
        let q = pairing.module.from_coords(&pad(&b, pairing.module.dim()));
        let before = pairing.eval(&p, &q).unwrap();
        let after = pairing
            .eval(&pairing.dual.group_act(&g, &p).unwrap(), &pairing.module.group_act(&g, &q).unwrap())
            .unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn gl2_pairing_is_invariant(d in 0i64..=4, shift in -2i64..=2, g in small_matrix(2), a in coeffs(5), b in coeffs(5)) {
        let pairing = invariant_pairing_gl2(Weight2::new(d + shift, shift).unwrap()).unwrap();
        let n = pairing.module.dim();
        let p = pairing.dual.from_coords(&a[..n]);
        let q = pairing.module.from_coords(&b[..n]);
        let after = pairing
            .eval(&pairing.dual.group_act(&g, &p).unwrap(), &pairing.module.group_act(&g, &q).unwrap())
            .unwrap();
        prop_assert_eq!(pairing.eval(&p, &q).unwrap(), after);
    }

    #[test]
    fn branching_is_equivariant(mu in weight3(), kappa in 2i64..=4, m in -3i64..=3, g in small_matrix(2), c in coeffs(3)) {
        let w_pi = kappa % 2;
        let lambda = Weight2::holomorphic(kappa, w_pi).unwrap();
        if let Some(hom) = branching_hom(lambda, m, mu).unwrap() {
            let src: &GL2Module = &hom.source;
            let q = src.from_coords(&c[..src.dim()]);
            let lhs = hom.apply(&src.group_act(&g, &q).unwrap()).unwrap();
            let rhs = hom.target.group_act(&iota(&g), &hom.apply(&q).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn s_is_so2_invariant(k in rotation2(), a in coeffs(10), b in coeffs(2)) {
        let omega = form(&a, 5, 2);
        let zeta = form(&b, 2, 1);
        let before = pairing_s(&omega, &zeta).unwrap();
        let after = pairing_s(
            &omega.pushforward(&dual_group_matrix_gk3(&iota(&k))),
            &zeta.pushforward(&dual_group_matrix_gk2(&k)),
        )
        .unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn s5_is_so3_invariant(k in rotation3(), a in coeffs(10), b in coeffs(10)) {
        let omega = form(&a, 5, 3);
        let eta = form(&b, 5, 2);
        let dk = dual_group_matrix_gk3(&k);
        let before = pairing_s5(&omega, &eta).unwrap();
        let after = pairing_s5(&omega.pushforward(&dk), &eta.pushforward(&dk)).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn so3_ladder_relations(ell in 0u32..=9, raw in 0i64..19) {
        let m = SO3Module::new(ell);
        let l = ell as i64;
        let i = raw % (2 * l + 1) - l;
        let v = m.v(i).clone();
        prop_assert_eq!(m.lie_act(&e12(), &v).unwrap(), v.scale(&Qi::gaussian(0, i)));
        let up = if i < l { m.v(i + 1).scale(&Qi::from_int(l - i)) } else { MultiPoly::zero(m.ring()) };
        prop_assert_eq!(m.lie_act(&e_plus(), &v).unwrap(), up);
        let down = if i > -l { m.v(i - 1).scale(&Qi::from_int(-l - i)) } else { MultiPoly::zero(m.ring()) };
        prop_assert_eq!(m.lie_act(&e_minus(), &v).unwrap(), down);
    }

    #[test]
    fn conjugated_ladder_is_rational(ell in prop::sample::select(vec![3i64, 5, 7]), w in prop::sample::select(vec![-2i64, 0, 2]), sign in prop::sample::select(vec![1i64, -1])) {
        let mu = Weight3::cohomological(ell, w).unwrap();
        let (rational, _) = rationality_check_ad(mu, sign, true).unwrap();
        prop_assert!(rational);
    }
}
