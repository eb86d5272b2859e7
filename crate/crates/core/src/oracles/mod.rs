//! Independent reference computations: closed-form two-wire formulas,
//! numerical quadrature of Green-matrix entries and a filament-partitioning
//! impedance solver.

mod filament;

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64 as c64;
use thiserror::Error;

use crate::geometry::{Conductor, MU0};
use crate::specfun::{bessel_j_ratio, kelvin_funcs, SpecfunError};

pub use filament::{filament_mesh, filament_partial, filament_solve, Filament, FILAMENT_MAX_COUNT, FILAMENT_MAX_FREQUENCY};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("invalid two-wire spec: {0}")]
    InvalidSpec(String),
    #[error("frequency too high for mesh: {0}")]
    MeshTooCoarse(String),
    #[error("filament limit exceeded: {0}")]
    TooManyFilaments(String),
    #[error("filament system singular")]
    Singular,
    #[error(transparent)]
    Bessel(#[from] SpecfunError),
}

/// `δ = 1/sqrt(π f μ σ)`.
pub fn skin_depth(f: f64, sigma: f64, mu: f64) -> f64 {
    1.0 / (PI * f * mu * sigma).sqrt()
}

/// Two identical round wires at center distance `separation`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoWireSpec {
    pub radius: f64,
    pub separation: f64,
    pub conductivity: f64,
    pub rel_permeability: f64,
    pub frequency: f64,
}

impl TwoWireSpec {
    pub fn copper(radius: f64, separation: f64, frequency: f64) -> Self {
        Self {
            radius,
            separation,
            conductivity: 58e6,
            rel_permeability: 1.0,
            frequency,
        }
    }

    fn check(&self) -> Result<(), OracleError> {
        if !(self.separation > 2.0 * self.radius && self.radius > 0.0) {
            return Err(OracleError::InvalidSpec(format!(
                "need D > 2a, got D = {}, a = {}",
                self.separation, self.radius
            )));
        }
        if !(self.frequency > 0.0 && self.conductivity > 0.0 && self.rel_permeability > 0.0) {
            return Err(OracleError::InvalidSpec("f, sigma, mu_r must be positive".into()));
        }
        Ok(())
    }

    pub fn skin_depth(&self) -> f64 {
        skin_depth(self.frequency, self.conductivity, self.rel_permeability * MU0)
    }

    /// `(μ0/π) cosh⁻¹(D/2a)`.
    pub fn external_inductance(&self) -> f64 {
        MU0 / PI * (self.separation / (2.0 * self.radius)).acosh()
    }
}

/// Fully developed skin effect with proximity: loop `(R, L_ext)`.
pub fn two_wire_hf(spec: &TwoWireSpec) -> Result<(f64, f64), OracleError> {
    spec.check()?;
    let rs = 1.0 / (spec.conductivity * spec.skin_depth());
    let ratio = spec.separation / (2.0 * spec.radius);
    let r = rs / (PI * spec.radius) * ratio / (ratio * ratio - 1.0).sqrt();
    Ok((r, spec.external_inductance()))
}

/// Isolated-wire internal impedance [Ω/m] from the Kelvin functions.
pub fn internal_impedance(radius: f64, conductivity: f64, rel_permeability: f64, frequency: f64) -> Result<c64, OracleError> {
    let delta = skin_depth(frequency, conductivity, rel_permeability * MU0);
    let xi = 2f64.sqrt() * radius / delta;
    let prefactor = 1.0 / (2f64.sqrt() * PI * radius * conductivity * delta);
    // (ber + j bei) / (bei' - j ber')
    let shape = if xi <= 500.0 {
        let k = kelvin_funcs(xi)?;
        k.value() / c64::new(k.dbei, -k.dber)
    } else {
        // same quotient written as j / (e^{j3π/4} J0'/J0) to avoid overflow
        let rot = c64::from_polar(1.0, 3.0 * FRAC_PI_4);
        c64::i() / (rot * bessel_j_ratio(0, rot * xi)?)
    };
    Ok(prefactor * shape)
}

/// Wide-separation loop impedance `2 Z_int + jω L_ext` [Ω/m].
pub fn two_wire_wide(spec: &TwoWireSpec) -> Result<c64, OracleError> {
    spec.check()?;
    let zint = internal_impedance(spec.radius, spec.conductivity, spec.rel_permeability, spec.frequency)?;
    let omega = 2.0 * PI * spec.frequency;
    Ok(2.0 * zint + c64::new(0.0, omega * spec.external_inductance()))
}

/// Nested periodic-trapezoid evaluation, `m` points per angle, of
/// `(1/2π) ⟨⟨ ln|r_p(θ) − r_q(θ')| e^{j(nθ' − n'θ)} ⟩⟩` for `p ≠ q`.
pub fn green_quadrature(p: &Conductor, q: &Conductor, n_test: i64, n: i64, m: usize) -> c64 {
    let step = 2.0 * PI / m as f64;
    let ring_q: Vec<(f64, f64, c64)> = (0..m)
        .map(|k| {
            let t = k as f64 * step;
            (
                q.center_x + q.radius * t.cos(),
                q.center_y + q.radius * t.sin(),
                c64::from_polar(1.0, n as f64 * t),
            )
        })
        .collect();
    let mut total = c64::new(0.0, 0.0);
    for i in 0..m {
        let t = i as f64 * step;
        let x = p.center_x + p.radius * t.cos();
        let y = p.center_y + p.radius * t.sin();
        let mut inner = c64::new(0.0, 0.0);
        for &(xq, yq, w) in &ring_q {
            let (dx, dy) = (x - xq, y - yq);
            inner += w * (0.5 * (dx * dx + dy * dy).ln());
        }
        total += inner * c64::from_polar(1.0, -(n_test as f64) * t);
    }
    total / (2.0 * PI * (m * m) as f64)
}

/// Points per angle for [`green_quadrature`] to reach roughly `tol` for this pair.
///
/// The trapezoid error decays like `ρ^m`, where `ρ` is the larger of
/// `a_q / (d − a_p)` and `a_p / (d − a_q)`.
pub fn quadrature_points(p: &Conductor, q: &Conductor, tol: f64) -> usize {
    let d = (p.center_x - q.center_x).hypot(p.center_y - q.center_y);
    let rho = f64::max(q.radius / (d - p.radius), p.radius / (d - q.radius));
    let m = (tol.ln() / rho.ln()).ceil().max(64.0) as usize;
    m.next_power_of_two()
}
