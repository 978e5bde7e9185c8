use archi_exact::{ExactMatrix, MultiPoly, Qi};
use proptest::prelude::*;

fn small_qi() -> impl Strategy<Value = Qi> {
    (-4i64..=4, -4i64..=4, 1i64..=3).prop_map(|(a, b, d)| {
        Qi::new(archi_exact::rat(a, d), archi_exact::rat(b, d))
    })
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(proptest::collection::vec(small_qi(), cols), rows)
        .prop_map(ExactMatrix::from_rows)
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    let ring = MultiPoly::ring(&["x", "y", "z"]);
    proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), small_qi()), 0..5).prop_map(
        move |terms| {
            let mut p = MultiPoly::zero(&ring);
            for ((a, b, c), q) in terms {
                p.add_term(vec![a, b, c], &q);
            }
            p
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solve_recovers_consistent_rhs(a in matrix(4, 3), x0 in proptest::collection::vec(small_qi(), 3)) {
        let b = a.mul_vec(&x0);
        let x = a.solve(&b).unwrap();
        prop_assert_eq!(a.mul_vec(&x), b);
    }

    #[test]
    fn kernel_dimension_is_cols_minus_rank(a in matrix(3, 5)) {
        let k = a.kernel();
        prop_assert_eq!(k.len(), a.cols() - a.rank());
        for v in &k {
            prop_assert!(a.mul_vec(v).iter().all(Qi::is_zero));
        }
    }

    #[test]
    fn rank_deficient_product(a in matrix(4, 2), b in matrix(2, 4)) {
        // rank(AB) ≤ 2, so a 4×4 product always has a kernel
        let ab = a.mul(&b);
        prop_assert!(ab.kernel().len() >= 2);
    }

    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn derivative_is_a_derivation(p in poly(), q in poly()) {
        let lhs = p.mul(&q).derivative(1);
        let rhs = p.derivative(1).mul(&q).add(&p.mul(&q.derivative(1)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn field_inverse(z in small_qi()) {
        prop_assume!(!z.is_zero());
        prop_assert!((&z * &z.inv().unwrap()).is_one());
    }
}
