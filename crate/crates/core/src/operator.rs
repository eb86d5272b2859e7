//! Discrete surface admittance operator of round conductors.
//!
//! For conductor `p` and harmonic `n`, the operator maps the Fourier
//! coefficient of the boundary field `E_n` onto the coefficient `J_n` of the
//! equivalent surface current. It is diagonal and depends on `|n|` only.

use std::f64::consts::PI;

use num_complex::Complex64 as c64;
use thiserror::Error;

use crate::geometry::{Conductor, CrossSection, GeometryError, HarmonicLayout, MU0};
use crate::specfun::{bessel_j_zratio, SpecfunError};

#[derive(Debug, Error)]
pub enum OperatorError {
    #[error("frequency must be positive (omega = {0})")]
    NonPositiveFrequency(f64),
    #[error("conductor {id}, harmonic {n}: {source}")]
    Bessel {
        id: i64,
        n: i64,
        #[source]
        source: SpecfunError,
    },
    #[error(transparent)]
    Layout(#[from] GeometryError),
}

/// Conductor and outer-medium wavenumbers at angular frequency `omega`.
///
/// `k = sqrt(ωμ(ωε − jσ))` on the branch with `Im k ≤ 0`; `k_out = ω sqrt(μ0 ε_out)`.
pub fn wavenumbers(
    c: &Conductor,
    outer_permittivity: f64,
    omega: f64,
) -> Result<(c64, f64), OperatorError> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(OperatorError::NonPositiveFrequency(omega));
    }
    let mu = c.permeability();
    let k2 = omega * mu * c64::new(omega * c.permittivity(), -c.conductivity);
    let mut k = k2.sqrt();
    if k.im > 0.0 {
        k = -k;
    }
    let k_out = omega * (MU0 * outer_permittivity).sqrt();
    Ok((k, k_out))
}

/// Diagonal entry of the surface admittance operator for harmonic `n` [S].
pub fn ys_entry(
    n: i64,
    c: &Conductor,
    outer_permittivity: f64,
    omega: f64,
) -> Result<c64, OperatorError> {
    let (k, k_out) = wavenumbers(c, outer_permittivity, omega)?;
    let order = n.unsigned_abs() as u32;
    let wrap = |source| OperatorError::Bessel { id: c.id, n, source };
    let inner = bessel_j_zratio(order, k * c.radius).map_err(wrap)?;
    let outer = bessel_j_zratio(order, c64::new(k_out * c.radius, 0.0)).map_err(wrap)?;
    let bracket = inner / c.permeability() - outer / MU0;
    Ok(2.0 * PI / c64::new(0.0, omega) * bracket)
}

/// Diagonal of `Y_s` over a whole layout, plus the frequency it was built for.
#[derive(Debug, Clone)]
pub struct SurfaceAdmittance {
    pub diagonal: Vec<c64>,
    pub frequency: f64,
}

impl SurfaceAdmittance {
    pub fn len(&self) -> usize {
        self.diagonal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonal.is_empty()
    }
}

pub fn assemble_ys(
    cs: &CrossSection,
    layout: &HarmonicLayout,
    omega: f64,
) -> Result<SurfaceAdmittance, OperatorError> {
    layout.check(cs)?;
    let mut diagonal = vec![c64::new(0.0, 0.0); layout.size()];
    for (p, c) in cs.conductors.iter().enumerate() {
        let np = layout.order(p) as i64;
        for m in 0..=np {
            let y = ys_entry(m, c, cs.outer_permittivity, omega)?;
            diagonal[layout.index(p, m)] = y;
            diagonal[layout.index(p, -m)] = y;
        }
    }
    Ok(SurfaceAdmittance {
        diagonal,
        frequency: omega / (2.0 * PI),
    })
}
