mod support;

use pulcalc::geometry::two_wire;
use support::{pair_loop, rel};

#[test]
fn close_pair_converges_in_order() {
    let cs = two_wire(0.01, 0.025);
    for k in 0..=12 {
        let f = 10f64.powf(k as f64 / 2.0);
        let z4 = pair_loop(&cs, 4, f);
        let z6 = pair_loop(&cs, 6, f);
        assert!(rel(z4, z6) <= 1e-3, "f={f}: {z4} vs {z6}");
    }
}

#[test]
fn truncation_error_decreases_monotonically() {
    let cs = two_wire(0.01, 0.025);
    for f in [1e3, 1e6] {
        let reference = pair_loop(&cs, 16, f);
        let errors: Vec<f64> = (0..=10).map(|n| rel(pair_loop(&cs, n, f), reference)).collect();
        for w in errors.windows(2) {
            assert!(w[1] < w[0], "f={f}: {errors:?}");
        }
    }
}

#[test]
fn zero_order_misses_proximity_for_close_pair() {
    let cs = two_wire(0.01, 0.025);
    let z0 = pair_loop(&cs, 0, 1e5);
    let z6 = pair_loop(&cs, 6, 1e5);
    // proximity raises the resistance well above the axisymmetric estimate
    assert!(z6.re > 1.2 * z0.re, "{} vs {}", z6.re, z0.re);
    let wide = two_wire(0.01, 0.1);
    let w0 = pair_loop(&wide, 0, 1e5);
    let w6 = pair_loop(&wide, 6, 1e5);
    assert!((w6.re - w0.re).abs() < 0.02 * w6.re);
}
