//! Bessel-function kernels for complex arguments.
//!
//! The production path never forms `J_n(z)` for large `|z|`: logarithmic
//! derivatives come from the ratio `J_{n+1}/J_n`, evaluated by the modified
//! Lentz continued fraction (large `|z|`) or by backward recurrence (small
//! `|z|`). Absolute values of `J_0`, `J_1` are only needed for the Kelvin
//! functions and for interior field profiles, and are returned with the
//! `exp(|Im z|)` growth factored out.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64 as c64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    #[error("ratio pole: J_{order}(z) vanishes at z = {z}")]
    RatioPole { order: u32, z: c64 },
    #[error("continued fraction for order {order} did not converge at z = {z}")]
    NoConvergence { order: u32, z: c64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

const TINY: f64 = 1e-100;
const CF_EPS: f64 = 1e-15;
/// Ratios larger than this multiple of their natural scale are reported as poles.
const POLE_LIMIT: f64 = 1e13;
/// Below this modulus `J_0`, `J_1` use the power series, above it the Hankel expansion.
const SERIES_LIMIT: f64 = 12.0;

/// `J_{n+1}(z) / J_n(z)`.
pub fn bessel_j_next_ratio(n: u32, z: c64) -> Result<c64, SpecfunError> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(SpecfunError::InvalidArgument(format!("non-finite z = {z}")));
    }
    let r = z.norm();
    if r == 0.0 {
        return Ok(c64::new(0.0, 0.0));
    }
    let switch = f64::max(10.0, 2.0 * n as f64);
    let rho = if r < switch {
        backward_recurrence(n, z)
    } else {
        lentz(n, z)?
    };
    let scale = 1.0 + (n as f64 + 1.0) / r + r;
    if !(rho.re.is_finite() && rho.im.is_finite()) || rho.norm() > POLE_LIMIT * scale {
        return Err(SpecfunError::RatioPole { order: n, z });
    }
    Ok(rho)
}

/// `J'_n(z) / J_n(z)`, the logarithmic derivative of `J_n`.
pub fn bessel_j_ratio(n: u32, z: c64) -> Result<c64, SpecfunError> {
    if z.norm() == 0.0 {
        if n == 0 {
            return Ok(c64::new(0.0, 0.0));
        }
        return Err(SpecfunError::RatioPole { order: n, z });
    }
    let rho = bessel_j_next_ratio(n, z)?;
    let out = n as f64 / z - rho;
    let scale = 1.0 + n as f64 / z.norm() + z.norm();
    if !(out.re.is_finite() && out.im.is_finite()) || out.norm() > POLE_LIMIT * scale {
        return Err(SpecfunError::RatioPole { order: n, z });
    }
    Ok(out)
}

/// `z J'_n(z) / J_n(z)`, finite at `z = 0` where it equals `n`.
pub fn bessel_j_zratio(n: u32, z: c64) -> Result<c64, SpecfunError> {
    if z.norm() == 0.0 {
        return Ok(c64::new(n as f64, 0.0));
    }
    let rho = bessel_j_next_ratio(n, z)?;
    Ok(n as f64 - z * rho)
}

fn backward_recurrence(n: u32, z: c64) -> c64 {
    // rho_{m-1} = 1 / (2m/z - rho_m), started from rho_M = 0 far above n.
    let start = n as usize + 2 * z.norm().ceil() as usize + 60;
    let mut rho = c64::new(0.0, 0.0);
    for m in (n as usize + 1..=start).rev() {
        let mut den = 2.0 * m as f64 / z - rho;
        if den.norm() < TINY {
            den = c64::new(TINY, 0.0);
        }
        rho = 1.0 / den;
    }
    rho
}

fn lentz(n: u32, z: c64) -> Result<c64, SpecfunError> {
    // rho = 1/(b1 - 1/(b2 - 1/(b3 - ...))), b_k = 2(n+k)/z
    let inv = 2.0 / z;
    let max_iter = 10_000 + 50 * z.norm().ceil() as usize;
    let mut f = c64::new(TINY, 0.0);
    let mut c = f;
    let mut d = c64::new(0.0, 0.0);
    for k in 1..=max_iter {
        let b = (n as f64 + k as f64) * inv;
        let a = if k == 1 { 1.0 } else { -1.0 };
        d = b + a * d;
        if d.norm() < TINY {
            d = c64::new(TINY, 0.0);
        }
        c = b + a / c;
        if c.norm() < TINY {
            c = c64::new(TINY, 0.0);
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < CF_EPS {
            return Ok(f);
        }
    }
    Err(SpecfunError::NoConvergence { order: n, z })
}

fn factorial(k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}

/// Power series of `J_n(z) e^{-|Im z|}`; accurate for moderate `|z|`.
fn series_scaled(n: u32, z: c64) -> c64 {
    let q = -z * z / 4.0;
    let mut term = (z / 2.0).powu(n) / factorial(n);
    let mut sum = term;
    for k in 1..500u32 {
        term = term * q / (k as f64 * (n + k) as f64);
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() && k > 2 {
            break;
        }
    }
    sum * (-z.im.abs()).exp()
}

/// Hankel asymptotic expansion of `J_n(z) e^{-|Im z|}` for `Re z ≥ 0`.
fn hankel_scaled(n: u32, z: c64) -> c64 {
    let mu = 4.0 * (n as f64) * (n as f64);
    let chi = z - (n as f64 / 2.0 + 0.25) * PI;
    let eight_z = 8.0 * z;
    // a_k = prod_{i=1..k} (mu - (2i-1)^2) / (k! 8^k), P/Q alternate signs.
    let mut p = c64::new(1.0, 0.0);
    let mut q = c64::new(0.0, 0.0);
    let mut term = c64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for k in 1..200u32 {
        let odd = (2 * k - 1) as f64;
        term = term * (mu - odd * odd) / (k as f64 * eight_z);
        let mag = term.norm();
        if mag > last {
            break;
        }
        last = mag;
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if mag < 1e-17 {
            break;
        }
    }
    // cos/sin of chi with exp(|Im z|) removed; Im(chi) = Im(z).
    let y = z.im.abs();
    let e_plus = (c64::i() * chi - y).exp();
    let e_minus = (-c64::i() * chi - y).exp();
    let cos = (e_plus + e_minus) / 2.0;
    let sin = (e_plus - e_minus) / (2.0 * c64::i());
    (2.0 / (PI * z)).sqrt() * (p * cos - q * sin)
}

/// `J_n(z) e^{-|Im z|}` for `n ∈ {0, 1}`.
fn bessel_j01_scaled(n: u32, z: c64) -> c64 {
    debug_assert!(n <= 1);
    if z.norm() <= SERIES_LIMIT {
        return series_scaled(n, z);
    }
    if z.re < 0.0 {
        let v = hankel_scaled(n, -z);
        return if n == 1 { -v } else { v };
    }
    hankel_scaled(n, z)
}

/// `J_n(z) e^{-|Im z|}`. Orders above one are reached through ratios from `J_0`,
/// so `z` must not be a zero of any `J_m`, `m < n` (never the case off the real axis).
pub fn bessel_j_scaled(n: u32, z: c64) -> Result<c64, SpecfunError> {
    if n <= 1 {
        return Ok(bessel_j01_scaled(n, z));
    }
    if z.norm() <= SERIES_LIMIT {
        return Ok(series_scaled(n, z));
    }
    let mut v = bessel_j01_scaled(0, z);
    for m in 0..n {
        v *= bessel_j_next_ratio(m, z)?;
    }
    Ok(v)
}

/// `J_n(z_num) / J_n(z_den)` without overflow for large arguments.
pub fn bessel_j_quotient(n: u32, z_num: c64, z_den: c64) -> Result<c64, SpecfunError> {
    let num = bessel_j_scaled(n, z_num)?;
    let den = bessel_j_scaled(n, z_den)?;
    if den.norm() == 0.0 || !den.norm().is_finite() {
        return Err(SpecfunError::RatioPole { order: n, z: z_den });
    }
    Ok(num / den * (z_num.im.abs() - z_den.im.abs()).exp())
}

/// Kelvin functions `ber, bei` and their derivatives at `ξ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kelvin {
    pub ber: f64,
    pub bei: f64,
    pub dber: f64,
    pub dbei: f64,
}

impl Kelvin {
    /// `ber + j bei = J_0(ξ e^{j3π/4})`.
    pub fn value(&self) -> c64 {
        c64::new(self.ber, self.bei)
    }

    /// `ber' + j bei'`.
    pub fn derivative(&self) -> c64 {
        c64::new(self.dber, self.dbei)
    }
}

/// Evaluates `ber, bei, ber', bei'` from `J_0`, `J_1` at `ξ e^{j3π/4}`.
pub fn kelvin_funcs(xi: f64) -> Result<Kelvin, SpecfunError> {
    if !(xi >= 0.0 && xi.is_finite()) {
        return Err(SpecfunError::InvalidArgument(format!("xi = {xi}")));
    }
    let rot = c64::from_polar(1.0, 3.0 * FRAC_PI_4);
    let z = rot * xi;
    let grow = z.im.abs().exp();
    let j0 = bessel_j01_scaled(0, z) * grow;
    let j1 = bessel_j01_scaled(1, z) * grow;
    // d/dξ J0(ξ e^{j3π/4}) = -e^{j3π/4} J1
    let d = -rot * j1;
    Ok(Kelvin {
        ber: j0.re,
        bei: j0.im,
        dber: d.re,
        dbei: d.im,
    })
}
