#![allow(dead_code)]

pub mod frozen;

use faer::Mat;
use num_complex::Complex64 as c64;
use pulcalc::geometry::{Conductor, CrossSection};
use pulcalc::solver::{reference_reduce, sweep, FrequencyGrid, SolveSettings};
use rand::Rng;

pub fn c(p: (f64, f64)) -> c64 {
    c64::new(p.0, p.1)
}

pub fn rel(a: c64, b: c64) -> f64 {
    (a - b).norm() / b.norm()
}

/// Partial impedance [Ω/m] at each frequency.
pub fn partial_z(cs: &CrossSection, order: usize, freqs: &[f64]) -> Vec<Mat<c64>> {
    let out = sweep(cs, &SolveSettings::uniform(order, FrequencyGrid::Explicit(freqs.to_vec()))).unwrap();
    out.results.iter().map(|r| r.impedance()).collect()
}

/// Loop impedance of conductor 0 against conductor 1 for a pair.
pub fn pair_loop(cs: &CrossSection, order: usize, f: f64) -> c64 {
    let z = &partial_z(cs, order, &[f])[0];
    reference_reduce(z, 1).unwrap()[(0, 0)]
}

pub fn max_abs(m: &Mat<c64>) -> f64 {
    let mut v = 0.0f64;
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            v = v.max(m[(i, j)].norm());
        }
    }
    v
}

/// `P` non-overlapping conductors with radii in [1, 10] mm and a minimum
/// surface gap of `gap_ratio` times the sum of radii.
pub fn random_section<R: Rng>(rng: &mut R, count: usize, gap_ratio: f64) -> CrossSection {
    let mut conductors: Vec<Conductor> = Vec::with_capacity(count);
    let mut id = 1;
    while conductors.len() < count {
        let r = rng.random_range(1e-3..10e-3);
        let x = rng.random_range(-0.05..0.05);
        let y = rng.random_range(-0.05..0.05);
        let ok = conductors
            .iter()
            .all(|c| (c.center_x - x).hypot(c.center_y - y) > (1.0 + gap_ratio) * (c.radius + r));
        if !ok {
            continue;
        }
        let sigma = if rng.random_bool(0.7) { 58e6 } else { rng.random_range(1e6..6e7) };
        let mu_r = if rng.random_bool(0.8) { 1.0 } else { rng.random_range(1.0..200.0) };
        conductors.push(Conductor::new(id, x, y, r, sigma).with_permeability(mu_r));
        id += 1;
    }
    CrossSection::new(conductors)
}
