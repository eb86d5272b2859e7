use std::f64::consts::PI;

use faer::Mat;
use num_complex::Complex64 as c64;

use super::{solve_system, SolveError};
use crate::geometry::{CrossSection, HarmonicLayout, MU0};
use crate::green::GreenMatrix;
use crate::operator::wavenumbers;
use crate::specfun::bessel_j_quotient;

/// Interior longitudinal current density under a prescribed set of
/// conductor currents, expanded as `σ Σ_n E_n J_|n|(kr)/J_|n|(ka) e^{jnθ}`.
#[derive(Debug, Clone)]
pub struct DensityField {
    cs: CrossSection,
    layout: HarmonicLayout,
    /// Boundary field coefficients `E`, length `N`.
    pub field: Vec<c64>,
    /// Surface current coefficients `J`, length `N`.
    pub current: Vec<c64>,
    /// Condition estimate of the moment matrix.
    pub condition: f64,
    wavenumbers: Vec<c64>,
}

pub fn density_field(
    cs: &CrossSection,
    layout: &HarmonicLayout,
    omega: f64,
    green: &GreenMatrix,
    drive: &[c64],
) -> Result<DensityField, SolveError> {
    if drive.len() != cs.len() {
        return Err(SolveError::Dimension(format!(
            "{} drive currents for {} conductors",
            drive.len(),
            cs.len()
        )));
    }
    let sol = solve_system(cs, layout, omega, green)?;
    let p = cs.len();
    let size = layout.size();
    let i = Mat::from_fn(p, 1, |r, _| drive[r]);
    let v = &sol.z * &i;
    let j = &sol.response * &v;
    // E = jωμ0 G J + U Z I
    let scale = c64::new(0.0, omega * MU0);
    let mut e = &green.data * &j;
    for r in 0..size {
        e[(r, 0)] *= scale;
    }
    for q in 0..p {
        e[(layout.index(q, 0), 0)] += v[(q, 0)];
    }
    let wavenumbers = cs
        .conductors
        .iter()
        .map(|c| wavenumbers(c, cs.outer_permittivity, omega).map(|(k, _)| k))
        .collect::<Result<_, _>>()?;
    Ok(DensityField {
        cs: cs.clone(),
        layout: layout.clone(),
        field: (0..size).map(|r| e[(r, 0)]).collect(),
        current: (0..size).map(|r| j[(r, 0)]).collect(),
        condition: sol.condition,
        wavenumbers,
    })
}

impl DensityField {
    /// Index of the conductor containing `(x, y)`.
    pub fn conductor_at(&self, x: f64, y: f64) -> Option<usize> {
        self.cs.conductors.iter().position(|c| c.contains(x, y))
    }

    /// Current density [A/m²] at a point inside conductor `p`, in polar
    /// coordinates about its center.
    pub fn at_polar(&self, p: usize, r: f64, theta: f64) -> Result<c64, SolveError> {
        let c = &self.cs.conductors[p];
        if c.conductivity == 0.0 {
            return Ok(c64::new(0.0, 0.0));
        }
        let k = self.wavenumbers[p];
        let np = self.layout.order(p) as i64;
        let mut sum = c64::new(0.0, 0.0);
        for n in -np..=np {
            let coeff = self.field[self.layout.index(p, n)];
            if coeff.norm() == 0.0 {
                continue;
            }
            let radial = bessel_j_quotient(n.unsigned_abs() as u32, k * r, k * c.radius)?;
            sum += coeff * radial * c64::from_polar(1.0, n as f64 * theta);
        }
        Ok(sum * c.conductivity)
    }

    pub fn at(&self, x: f64, y: f64) -> Result<c64, SolveError> {
        let p = self.conductor_at(x, y).ok_or(SolveError::ExteriorPoint { x, y })?;
        let c = &self.cs.conductors[p];
        let (dx, dy) = (x - c.center_x, y - c.center_y);
        self.at_polar(p, dx.hypot(dy), dy.atan2(dx))
    }

    /// Net current of conductor `p` carried by the surface-current expansion.
    pub fn total_current(&self, p: usize) -> c64 {
        self.current[self.layout.index(p, 0)]
    }
}

/// Current density at each sample point under drive currents `drive`.
pub fn current_density(
    cs: &CrossSection,
    layout: &HarmonicLayout,
    omega: f64,
    green: &GreenMatrix,
    drive: &[c64],
    points: &[(f64, f64)],
) -> Result<Vec<c64>, SolveError> {
    let field = density_field(cs, layout, omega, green, drive)?;
    points.iter().map(|&(x, y)| field.at(x, y)).collect()
}

/// Polar sample grid inside conductor `p`: `rings` radii (outermost just
/// inside the boundary) by `sectors` angles, plus the center.
pub fn polar_grid(cs: &CrossSection, p: usize, rings: usize, sectors: usize) -> Vec<(f64, f64)> {
    let c = &cs.conductors[p];
    let mut pts = vec![(c.center_x, c.center_y)];
    for i in 1..=rings {
        let r = c.radius * (i as f64 / rings as f64) * (1.0 - 1e-12);
        for s in 0..sectors {
            let t = 2.0 * PI * s as f64 / sectors as f64;
            pts.push((c.center_x + r * t.cos(), c.center_y + r * t.sin()));
        }
    }
    pts
}
