use archi_exact::Qi;
use archi_gamma::{
    barnes_first, barnes_second, gamma_complex, gamma_r, l_factor, straight_contour, Complex64, LFactorSpec, Scalar,
};
use archi_rep::pairing::branching_hom;
use archi_rep::weights::{Weight2, Weight3};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn functional_equation(r in 0.0f64..30.0, theta in 0.0f64..std::f64::consts::TAU) {
        let z = Complex64::from_polar(r, theta);
        prop_assume!((z.re.round() - z.re).abs() > 1e-6 || z.im.abs() > 1e-6 || z.re > 0.5);
        let lhs = gamma_complex(z + 1.0).unwrap();
        let rhs = z * gamma_complex(z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm(), "z = {}", z);
    }
}

/// ∫ f(σ+it) dt/2π by the trapezoid rule on [−T, T].
fn vertical_integral(sigma: f64, f: impl Fn(Complex64) -> Complex64) -> Complex64 {
    let (t_max, h) = (40.0, 0.02);
    let n = (t_max / h) as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in -n..=n {
        acc += f(Complex64::new(sigma, k as f64 * h));
    }
    acc * h / (2.0 * std::f64::consts::PI)
}

fn g(z: Complex64) -> Complex64 {
    gamma_r(z).unwrap()
}

fn random_params(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| Complex64::new(rng.gen_range(0.5..3.0), rng.gen_range(-1.0..1.0))).collect()
}

#[test]
fn barnes_lemmas_match_quadrature() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let p = random_params(&mut rng, 4);
        let sigma = straight_contour(&p[..2], &p[2..]).unwrap();
        let numeric = vertical_integral(sigma, |s| g(s + p[0]) * g(s + p[1]) * g(p[2] - s) * g(p[3] - s));
        let s: Vec<Scalar> = p.iter().map(|&z| Scalar::Numeric(z)).collect();
        let closed = barnes_first(&s[0], &s[1], &s[2], &s[3]).unwrap();
        assert!((numeric - closed).norm() <= 1e-8 * closed.norm(), "first lemma at {p:?}");

        let p = random_params(&mut rng, 5);
        let sigma = straight_contour(&p[..3], &p[3..]).unwrap();
        let total: Complex64 = p.iter().sum();
        let numeric = vertical_integral(sigma, |s| {
            g(s + p[0]) * g(s + p[1]) * g(s + p[2]) * g(p[3] - s) * g(p[4] - s) / g(s + total)
        });
        let s: Vec<Scalar> = p.iter().map(|&z| Scalar::Numeric(z)).collect();
        let closed = barnes_second(&s[0], &s[1], &s[2], &s[3], &s[4]).unwrap();
        assert!((numeric - closed).norm() <= 1e-8 * closed.norm(), "second lemma at {p:?}");
    }
}

#[test]
fn barnes_first_quadrature_at_1212() {
    let p = [1.0, 2.0, 1.0, 2.0].map(|x| Complex64::new(x, 0.0));
    let numeric = vertical_integral(0.0, |s| g(s + p[0]) * g(s + p[1]) * g(p[2] - s) * g(p[3] - s));
    let closed = barnes_first(&Scalar::int(1), &Scalar::int(2), &Scalar::int(1), &Scalar::int(2)).unwrap();
    assert!((numeric - closed).norm() <= 1e-8 * closed.norm());
}

/// For κ < ℓ, s = m+1/2 is a pole of neither L(s, Σ×Π) nor L(1−s, Σ^∨×Π^∨)
/// exactly when Hom(M_{λ+m}^∨, M_μ) ≠ 0. For κ > ℓ there are regular points
/// but the Hom space is always zero.
#[test]
fn regular_points_are_the_critical_points() {
    for ell in [3i64, 5, 7] {
        for w_sigma in [-2i64, 0, 2] {
            let mu = Weight3::cohomological(ell, w_sigma).unwrap();
            for kappa in 2i64..=6 {
                for w_pi in [kappa % 2 - 2, kappa % 2, kappa % 2 + 2] {
                    let lambda = Weight2::holomorphic(kappa, w_pi).unwrap();
                    let l = LFactorSpec::RankinSelberg { ell, kappa, w_sigma, w_pi };
                    let dual = LFactorSpec::RankinSelbergDual { ell, kappa, w_sigma, w_pi };
                    for m in -8i64..=8 {
                        let s = Qi::from_ratio(2 * m + 1, 2);
                        let regular = l.expr().pole_order(&Scalar::Exact(s.clone())) <= 0
                            && dual.expr().pole_order(&Scalar::Exact(&Qi::one() - &s)) <= 0;
                        let critical = branching_hom(lambda, m, mu).unwrap().is_some();
                        if kappa < ell {
                            assert_eq!(regular, critical, "ℓ={ell} κ={kappa} w=({w_sigma},{w_pi}) m={m}");
                        } else {
                            assert!(!critical, "ℓ={ell} κ={kappa} w=({w_sigma},{w_pi}) m={m}");
                        }
                        if regular {
                            assert!(l_factor(&l, &Scalar::Exact(s)).is_ok());
                        }
                    }
                }
            }
        }
    }
}
