mod support;

use std::f64::consts::PI;

use pulcalc::geometry::two_wire;
use pulcalc::oracles::{filament_solve, two_wire_wide, TwoWireSpec};
use support::rel;

#[test]
fn mesh_refinement_changes_shrink() {
    let cs = two_wire(0.01, 0.025);
    let z: Vec<_> = [4, 8, 16]
        .iter()
        .map(|&rings| filament_solve(&cs, 2.0 * PI * 50.0, rings).unwrap()[(0, 0)])
        .collect();
    let (d1, d2) = ((z[1] - z[0]).norm(), (z[2] - z[1]).norm());
    assert!(d2 < 0.5 * d1, "{d1} then {d2}");
}

#[test]
fn wide_pair_matches_kelvin_formula() {
    let cs = two_wire(0.01, 0.1);
    for f in [50.0, 1000.0] {
        let z = filament_solve(&cs, 2.0 * PI * f, 14).unwrap()[(0, 0)];
        let reference = two_wire_wide(&TwoWireSpec::copper(0.01, 0.1, f)).unwrap();
        assert!(rel(z, reference) < 0.02, "f={f}: {z} vs {reference}");
    }
}
