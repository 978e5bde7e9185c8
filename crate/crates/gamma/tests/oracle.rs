//! Provenance check of the Lanczos coefficients: 40-digit reference values
//! from mpmath (computed once, frozen here).

use archi_gamma::{gamma_complex, Complex64};

#[rustfmt::skip]
#[allow(clippy::excessive_precision)]
const REFERENCE: [(f64, f64, f64, f64); 17] = [
    (4.0, 3.0, -1.1294284935320540679, -1.5112519522899561989),
    (1.0, 0.0, 1.0, 0.0),
    (0.5, 0.0, 1.7724538509055160273, 0.0),
    (0.5, 50.0, 9.0332043526006192339e-35, 1.7263622522690938061e-34),
    (1.0, -40.0, 3.7971346597543698976e-28, -8.1681573318560671142e-27),
    (60.0, 0.0, 1.3868311854568983574e+80, 0.0),
    (-3.5, 2.0, -0.0015618374328767545447, 0.0004611942720843740309),
    (-0.25, 0.0, -4.9016668098607105805, 0.0),
    (12.75, -31.5, 0.0024403289545394102751, 0.00038140066665824240676),
    (0.1, 0.2, 1.5391003433867946979, -3.8384919018379110316),
    (2.5, 17.0, -1.7173376361627914551e-9, 6.5871137252780802403e-10),
    (-7.3, -4.1, -4.7436690950502892415e-9, -9.4887413984937935245e-10),
    (30.0, 35.0, 8.9331679551749334801e+22, -2.0195659254901618146e+23),
    (-20.5, 0.5, -5.5029252810245592593e-21, -1.1351245475413627314e-19),
    (0.001, 0.0, 999.4237724845954453, 0.0),
    (45.0, -40.0, 1.8018638714352724058e+47, 1.9812358455712113962e+47),
    (0.001, 49.0, -1.2056624021715078619e-34, 5.9433272234021756954e-35),
];

#[test]
fn lanczos_matches_reference() {
    for &(re, im, gr, gi) in &REFERENCE {
        let z = Complex64::new(re, im);
        let g = gamma_complex(z).unwrap();
        let expect = Complex64::new(gr, gi);
        let rel = (g - expect).norm() / expect.norm();
        assert!(rel <= 1e-13, "Γ({z}) = {g}, reference {expect}, relative error {rel:e}");
    }
}

#[test]
fn gamma_4_plus_3i() {
    let g = gamma_complex(Complex64::new(4.0, 3.0)).unwrap();
    assert!((g - Complex64::new(-1.129_428_493_532_054_1, -1.511_251_952_289_956_2)).norm() < 2e-15 * g.norm());
}
