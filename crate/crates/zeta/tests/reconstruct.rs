use archi_zeta::reconstruct_rational;
use proptest::prelude::*;

#[test]
fn simple_fractions() {
    let r = reconstruct_rational(-32.0, 1_000_000, 1e-6).unwrap();
    assert_eq!((r.numerator, r.denominator), (-32, 1));
    let r = reconstruct_rational(355.0 / 113.0, 1_000_000, 1e-12).unwrap();
    assert_eq!((r.numerator, r.denominator), (355, 113));
    assert_eq!(reconstruct_rational(0.0, 10, 1e-6).unwrap().numerator, 0);
    assert!(reconstruct_rational(f64::NAN, 10, 1e-6).is_none());
    // π to 1e−12 needs a denominator beyond 10
    assert!(reconstruct_rational(std::f64::consts::PI, 10, 1e-12).is_none());
}

proptest! {
    #[test]
    fn recovers_small_fractions(p in -100_000i64..100_000, q in 1u64..2000) {
        prop_assume!(p != 0);
        let x = p as f64 / q as f64;
        let r = reconstruct_rational(x, 1_000_000, 1e-13).unwrap();
        // same value in lowest terms
        prop_assert_eq!(r.numerator as i128 * q as i128, p as i128 * r.denominator as i128);
    }

    #[test]
    fn respects_denominator_bound(x in -1e3f64..1e3, bound in 1u64..1000) {
        if let Some(r) = reconstruct_rational(x, bound, 1e-6) {
            prop_assert!(r.denominator <= bound);
            prop_assert!(r.residual <= 1e-6);
        }
    }
}
