use archi_mellin::*;
use proptest::prelude::*;

fn mono(ell: u32, j: [u32; 3]) -> WhittakerSpec {
    WhittakerSpec::gl3_monomial(ell, 0, 1, j).unwrap()
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

// Oracle: direct double trapezoid sum with scipy's complex loggamma on the
// lines Re s1 = 0.7, Re s2 = 1.3 (T = 45, h = 0.03); a second run on
// Re s = 1 with T = 60 agreed to 2e−13.
const GOLDEN: [(f64, f64, f64); 3] = [
    (1.0, 1.0, 7.318677322423603e-08),
    (0.5, 2.0, 2.892154028027893e-09),
    (0.2, 0.3, 1.8133399694244157e-05),
];

#[test]
fn golden_values() {
    let ev = WhittakerEvaluator::new(&mono(5, [3, 0, 2]), &Contours::default()).unwrap();
    for (a1, a2, im) in GOLDEN {
        let v = ev.eval(a1, a2);
        assert!(rel(v, Complex64::new(0.0, im)) < 1e-10, "W({a1},{a2}) = {v}");
    }
    let v = whittaker_gl3(&mono(5, [3, 0, 2]), 1.0, 1.0).unwrap();
    assert!(rel(v, Complex64::new(0.0, GOLDEN[0].2)) < 1e-10);
}

#[test]
fn quadrature_converges_in_node_count() {
    let twice = |c: ContourSpec| ContourSpec { nodes: 2 * c.nodes, ..c };
    let d = Contours::default();
    let fine = Contours { first: twice(d.first), second: twice(d.second) };
    for (ell, j) in [(5, [3, 0, 2]), (3, [0, 0, 3]), (7, [1, 3, 3]), (9, [4, 1, 4])] {
        let a = WhittakerEvaluator::new(&mono(ell, j), &d).unwrap();
        let b = WhittakerEvaluator::new(&mono(ell, j), &fine).unwrap();
        for (a1, a2) in [(1.0, 1.0), (0.3, 0.7)] {
            let (x, y) = (a.eval(a1, a2), b.eval(a1, a2));
            assert!((x - y).norm() <= 1e-9 * y.norm(), "ℓ={ell} {j:?}: {x} vs {y}");
        }
    }
}

#[test]
fn tails_are_negligible_up_to_nine() {
    for ell in [3u32, 5, 7, 9] {
        for j in [[ell, 0, 0], [0, 0, ell], [0, ell, 0], [1, ell - 2, 1]] {
            let k = MonomialKernel::new(ell, 0, j, &Contours::default()).unwrap();
            assert!(k.diagnostics.tail_ratio < 1e-14, "ℓ={ell} {j:?}: {:?}", k.diagnostics);
        }
    }
}

#[test]
fn decays_along_rays() {
    for spec in [mono(5, [3, 0, 2]), mono(3, [0, 0, 3]), mono(7, [2, 2, 3])] {
        let ev = WhittakerEvaluator::new(&spec, &Contours::default()).unwrap();
        let one = ev.eval(1.0, 1.0).norm();
        for (a1, a2) in [(8.0, 1.0), (1.0, 8.0), (8.0, 8.0)] {
            assert!(ev.eval(a1, a2).norm() < 1e-6 * one, "{spec:?} at ({a1},{a2})");
        }
    }
}

#[test]
fn spherical_index_is_the_monomial_sum() {
    let d = Contours::default();
    for (ell, i) in [(3u32, 0i64), (5, -3), (5, 2)] {
        let spec = WhittakerSpec::gl3(ell, 0, 1, Gl3Index::Spherical(i)).unwrap();
        let direct = WhittakerEvaluator::with_path(&spec, &d, ExpansionPath::Direct).unwrap();
        let reduced = WhittakerEvaluator::with_path(&spec, &d, ExpansionPath::Reduced).unwrap();
        let u = [-1.5, 0.0, 0.5];
        let a = direct.eval_grid(&u, &u);
        let b = reduced.eval_grid(&u, &u);
        let scale = b.iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(scale > 0.0);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).norm() <= 1e-10 * scale, "ℓ={ell} i={i}: {x} vs {y}");
        }
        // explicit sum over the expansion
        let manual: Complex64 = monomial_expansion(ell, i, ExpansionPath::Reduced)
            .into_iter()
            .map(|(j, c)| {
                let (re, im) = c.to_f64_pair();
                Complex64::new(re, im) * whittaker_gl3(&mono(ell, j), 0.5, 0.8).unwrap()
            })
            .sum();
        assert!((manual - reduced.eval(0.5, 0.8)).norm() <= 1e-12 * scale);
    }
}

#[test]
fn independent_of_the_contours() {
    let spec = mono(5, [3, 0, 2]);
    let a = WhittakerEvaluator::new(&spec, &Contours::default()).unwrap();
    let b = WhittakerEvaluator::new(&spec, &Contours::with_abscissae(0.4, 1.7)).unwrap();
    let gl = ContourSpec { rule: QuadratureRule::GaussLegendrePanels, ..ContourSpec::default() };
    let c = WhittakerEvaluator::new(&spec, &Contours { first: gl, second: gl.with_abscissa(1.2) }).unwrap();
    for (a1, a2) in [(1.0, 1.0), (0.2, 0.3), (2.0, 0.1)] {
        let x = a.eval(a1, a2);
        assert!(rel(b.eval(a1, a2), x) < 1e-10);
        assert!(rel(c.eval(a1, a2), x) < 1e-10);
    }
}

#[test]
fn centre_acts_through_the_twist() {
    let spec = mono(5, [3, 0, 2]);
    let base = whittaker_gl3(&spec, 0.6, 0.9).unwrap();
    for a3 in [0.3, 2.0] {
        assert_eq!(whittaker_gl3_torus(&spec, 0.6, 0.9, a3).unwrap(), base);
    }
    let twisted = WhittakerSpec::gl3_monomial(5, 2, 1, [3, 0, 2]).unwrap();
    let v = whittaker_gl3(&twisted, 0.6, 0.9).unwrap();
    assert!(rel(v, base * (0.6f64 * 0.81).powf(1.0)) < 1e-13);
    let t = whittaker_gl3_torus(&twisted, 0.6, 0.9, 2.0).unwrap();
    assert!(rel(t, v * 8.0) < 1e-13);
}

#[test]
fn rejects_bad_points() {
    assert!(whittaker_gl3(&mono(5, [3, 0, 2]), -1.0, 1.0).is_err());
    assert!(whittaker_gl3(&WhittakerSpec::gl2(2, 0, 1).unwrap(), 1.0, 1.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 6, ..ProptestConfig::default() })]

    // x1² + x2² + x3² = 0 in V_ℓ, so the three monomial Whittaker functions
    // obtained by multiplying a degree ℓ−2 monomial with each square sum to zero.
    // Contour error is absolute, so the scale is the size over the whole window.
    #[test]
    fn quadric_relation(ell in prop::sample::select(vec![3u32, 5, 7]), a in 0u32..4, c in 0u32..4, u1 in -2.0f64..1.0, u2 in -2.0f64..1.0) {
        prop_assume!(a + c <= ell - 2);
        let b = ell - 2 - a - c;
        let d = Contours::default();
        let window = [-2.0, -1.0, 0.0, 1.0];
        let mut scale = 0.0f64;
        let mut w = |j: [u32; 3]| {
            let e = WhittakerEvaluator::new(&mono(ell, j), &d).unwrap();
            scale = e.eval_grid(&window, &window).iter().fold(scale, |m, v| m.max(v.norm()));
            e.eval_grid(&[u1], &[u2])[0]
        };
        let (x, y, z) = (w([a + 2, b, c]), w([a, b + 2, c]), w([a, b, c + 2]));
        prop_assert!((x + y + z).norm() <= 1e-10 * scale, "{} {} {}", x, y, z);
    }
}
