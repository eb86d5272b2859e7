use std::f64::consts::PI;

use faer::Mat;
use num_complex::Complex64 as c64;

use super::{skin_depth, OracleError};
use crate::geometry::{CrossSection, MU0};
use crate::linalg::Lu;
use crate::solver::reference_reduce;

pub const FILAMENT_MAX_FREQUENCY: f64 = 20e3;
pub const FILAMENT_MAX_COUNT: usize = 10_000;

/// One annular-sector filament with its centroid and exact area.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Filament {
    pub conductor: usize,
    pub x: f64,
    pub y: f64,
    pub area: f64,
}

/// Annular mesh of every conductor: a central disc of radius `a/rings`
/// plus `rings − 1` annuli, each cut into sectors about `a/rings` wide.
pub fn filament_mesh(cs: &CrossSection, rings: usize) -> Vec<Filament> {
    let rings = rings.max(1);
    let mut out = Vec::new();
    for (p, c) in cs.conductors.iter().enumerate() {
        let h = c.radius / rings as f64;
        out.push(Filament {
            conductor: p,
            x: c.center_x,
            y: c.center_y,
            area: PI * h * h,
        });
        for i in 1..rings {
            let (r1, r2) = (i as f64 * h, (i + 1) as f64 * h);
            let sectors = (2.0 * PI * (i as f64 + 0.5)).round() as usize;
            let width = 2.0 * PI / sectors as f64;
            let half = 0.5 * width;
            let rc = 2.0 / 3.0 * (r2.powi(3) - r1.powi(3)) / (r2 * r2 - r1 * r1) * half.sin() / half;
            let area = 0.5 * width * (r2 * r2 - r1 * r1);
            for s in 0..sectors {
                let t = (s as f64 + 0.5) * width;
                out.push(Filament {
                    conductor: p,
                    x: c.center_x + rc * t.cos(),
                    y: c.center_y + rc * t.sin(),
                    area,
                });
            }
        }
    }
    out
}

/// Partial impedance matrix [Ω/m] from a filament partition with `rings`
/// radial cells per conductor. Filament self terms use the geometric mean
/// distance of a disc of equal area.
pub fn filament_partial(cs: &CrossSection, omega: f64, rings: usize) -> Result<Mat<c64>, OracleError> {
    let f = omega / (2.0 * PI);
    if !(f > 0.0 && f <= FILAMENT_MAX_FREQUENCY) {
        return Err(OracleError::MeshTooCoarse(format!(
            "filament oracle is limited to 0 < f <= {FILAMENT_MAX_FREQUENCY} Hz, got {f}"
        )));
    }
    for c in &cs.conductors {
        if !(c.conductivity > 0.0) {
            return Err(OracleError::InvalidSpec(format!("conductor {} has zero conductivity", c.id)));
        }
        let delta = skin_depth(f, c.conductivity, c.permeability());
        let h = c.radius / rings.max(1) as f64;
        if h > 0.5 * delta {
            return Err(OracleError::MeshTooCoarse(format!(
                "conductor {}: cell size {h:.3e} m exceeds half the skin depth (delta = {delta:.3e} m)",
                c.id
            )));
        }
    }
    let mesh = filament_mesh(cs, rings);
    let nf = mesh.len();
    if nf > FILAMENT_MAX_COUNT {
        return Err(OracleError::TooManyFilaments(format!("{nf} > {FILAMENT_MAX_COUNT}")));
    }
    let k = omega * MU0 / (2.0 * PI);
    let zf = Mat::from_fn(nf, nf, |i, j| {
        let (a, b) = (&mesh[i], &mesh[j]);
        if i == j {
            let gmd = (-0.25f64).exp() * (a.area / PI).sqrt();
            let sigma = cs.conductors[a.conductor].conductivity;
            c64::new(1.0 / (sigma * a.area), -k * gmd.ln())
        } else {
            let d = (a.x - b.x).hypot(a.y - b.y);
            c64::new(0.0, -k * d.ln())
        }
    });
    let p = cs.len();
    let lu = Lu::factor(zf).map_err(|_| OracleError::Singular)?;
    let mut b = Mat::<c64>::zeros(nf, p);
    for (i, fil) in mesh.iter().enumerate() {
        b[(i, fil.conductor)] = c64::new(1.0, 0.0);
    }
    let x = lu.solve(b.as_ref());
    let mut y = Mat::<c64>::zeros(p, p);
    for (i, fil) in mesh.iter().enumerate() {
        for q in 0..p {
            y[(fil.conductor, q)] += x[(i, q)];
        }
    }
    let ylu = Lu::factor(y).map_err(|_| OracleError::Singular)?;
    Ok(ylu.inverse())
}

/// Loop impedances [Ω/m] of the filament model with the last conductor as
/// common return.
pub fn filament_solve(cs: &CrossSection, omega: f64, rings: usize) -> Result<Mat<c64>, OracleError> {
    let z = filament_partial(cs, omega, rings)?;
    if cs.len() < 2 {
        return Ok(z);
    }
    reference_reduce(&z, cs.len() - 1).map_err(|_| OracleError::Singular)
}
