mod support;

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64 as c64;
use pulcalc::oracles::internal_impedance;
use pulcalc::specfun::{bessel_j_ratio, bessel_j_scaled, bessel_j_zratio, kelvin_funcs};
use support::frozen::{INTERNAL_IMPEDANCE, KELVIN, LOG_DERIV, SCALED};
use support::{c, rel};

#[test]
fn log_derivative_matches_reference() {
    let mut worst = 0.0f64;
    for &(n, z, expect) in LOG_DERIV {
        let got = bessel_j_ratio(n, c(z)).unwrap();
        let e = rel(got, c(expect));
        assert!(e < 1e-11, "n={n} z={z:?}: {got} vs {expect:?} (rel {e:e})");
        worst = worst.max(e);
        let zr = bessel_j_zratio(n, c(z)).unwrap();
        assert!(rel(zr, c(z) * c(expect)) < 1e-11);
    }
    assert!(worst < 1e-11);
}

#[test]
fn scaled_values_match_reference() {
    for &(n, z, expect) in SCALED {
        let got = bessel_j_scaled(n, c(z)).unwrap();
        let e = (got - c(expect)).norm() / (c(expect).norm() + 1e-300);
        assert!(e < 1e-10, "n={n} z={z:?}: {got} vs {expect:?} (rel {e:e})");
    }
}

#[test]
fn kelvin_functions_match_reference() {
    for &(xi, ber, bei, dber, dbei) in KELVIN {
        let k = kelvin_funcs(xi).unwrap();
        let scale = c64::new(ber, bei).norm();
        let dscale = c64::new(dber, dbei).norm();
        assert!((k.value() - c64::new(ber, bei)).norm() < 1e-11 * scale, "xi={xi}");
        assert!((k.derivative() - c64::new(dber, dbei)).norm() < 1e-11 * dscale, "xi={xi}");
    }
}

#[test]
fn kelvin_log_derivative_consistent_with_ratio() {
    let rot = c64::from_polar(1.0, 3.0 * FRAC_PI_4);
    for xi in [2.0, 50.0] {
        let k = kelvin_funcs(xi).unwrap();
        let from_kelvin = k.derivative() / k.value();
        let from_ratio = rot * bessel_j_ratio(0, rot * xi).unwrap();
        assert!(rel(from_kelvin, from_ratio) < 1e-12, "xi={xi}");
    }
}

#[test]
fn internal_impedance_matches_reference() {
    for &(f, expect) in INTERNAL_IMPEDANCE {
        let got = internal_impedance(0.01, 58e6, 1.0, f).unwrap();
        assert!(rel(got, c(expect)) < 1e-9, "f={f}: {got} vs {expect:?}");
    }
}

#[test]
fn ratio_limits_on_both_sides_of_the_real_axis() {
    for x in [1e3, 1e4] {
        let below = bessel_j_ratio(0, c64::from_polar(x, -FRAC_PI_4)).unwrap();
        let above = bessel_j_ratio(0, c64::from_polar(x, FRAC_PI_4)).unwrap();
        assert!((below - c64::i()).norm() < 1e-3);
        assert!((above + c64::i()).norm() < 1e-3);
    }
    // along the real axis the ratio stays finite away from zeros of J_0
    assert!(bessel_j_ratio(0, c64::new(2.0 * PI, 0.0)).unwrap().norm().is_finite());
}
