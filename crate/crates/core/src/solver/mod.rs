//! Moment-method system with the surface admittance operator: per-unit-length
//! partial impedance, frequency sweeps, network reductions and interior
//! current density.
//!
//! With `A = 1 − jωμ0 Y_s G` and the selector `U` picking the `n = 0`
//! coefficient of every conductor, the partial impedance matrix is
//! `Z = R + jωL = [Uᵀ A⁻¹ Y_s U]⁻¹`. `A` is factored once per frequency and
//! solved against the `P` columns of `Y_s U`; its inverse is never formed.

mod density;
mod reduce;

use std::f64::consts::PI;
use std::time::Instant;

use faer::Mat;
use num_complex::Complex64 as c64;
use rayon::prelude::*;
use thiserror::Error;

use crate::geometry::{CrossSection, GeometryError, HarmonicLayout, MU0};
use crate::green::{assemble_green, GreenError, GreenMatrix};
use crate::linalg::{inverse_with_condition, LinalgError, Lu};
use crate::operator::{assemble_ys, OperatorError, SurfaceAdmittance};

pub use density::{current_density, density_field, polar_grid, DensityField};
pub use reduce::{
    kron_reduce, reduce_grounded, reference_reduce, sequence_impedances, GroundedReduction,
};

/// Condition numbers above this are logged.
pub const CONDITION_WARN: f64 = 1e12;
/// Condition numbers above this are rejected.
pub const CONDITION_FAIL: f64 = 1e16;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("ill-conditioned system ({what}): condition estimate {condition:e}")]
    IllConditioned { what: &'static str, condition: f64 },
    #[error("invalid settings: {0}")]
    Settings(String),
    #[error("Green matrix does not match the cross-section/layout")]
    GreenMismatch,
    #[error("point ({x}, {y}) is outside every conductor")]
    ExteriorPoint { x: f64, y: f64 },
    #[error("invalid reference conductor index {0}")]
    InvalidReference(usize),
    #[error("grounded subsystem singular")]
    GroundedSingular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("at f = {frequency} Hz: {source}")]
    AtFrequency {
        frequency: f64,
        #[source]
        source: Box<SolveError>,
    },
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Green(#[from] GreenError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Bessel(#[from] crate::specfun::SpecfunError),
}

/// Truncation orders `N_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Orders {
    Uniform(usize),
    PerConductor(Vec<usize>),
}

impl Default for Orders {
    fn default() -> Self {
        Orders::Uniform(3)
    }
}

impl Orders {
    pub fn layout(&self, cs: &CrossSection) -> Result<HarmonicLayout, SolveError> {
        match self {
            Orders::Uniform(n) => Ok(HarmonicLayout::uniform(cs.len(), *n)),
            Orders::PerConductor(v) if v.len() == cs.len() => Ok(HarmonicLayout::new(v.clone())),
            Orders::PerConductor(v) => Err(SolveError::Settings(format!(
                "{} orders given for {} conductors",
                v.len(),
                cs.len()
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FrequencyGrid {
    Explicit(Vec<f64>),
    /// `f_min · 10^(k / per_decade)` up to and including `f_max`.
    LogPerDecade {
        f_min: f64,
        f_max: f64,
        per_decade: usize,
    },
    /// `count` log-spaced points from `f_min` to `f_max` inclusive.
    LogCount { f_min: f64, f_max: f64, count: usize },
}

impl FrequencyGrid {
    pub fn frequencies(&self) -> Result<Vec<f64>, SolveError> {
        let out = match self {
            FrequencyGrid::Explicit(v) => v.clone(),
            FrequencyGrid::LogPerDecade {
                f_min,
                f_max,
                per_decade,
            } => {
                if *per_decade == 0 || !(f_min > &0.0) || f_max < f_min {
                    return Err(SolveError::Settings(format!(
                        "bad log grid {f_min}..{f_max} at {per_decade}/decade"
                    )));
                }
                let steps = ((f_max / f_min).log10() * *per_decade as f64 + 1e-9).floor() as usize;
                (0..=steps)
                    .map(|k| f_min * 10f64.powf(k as f64 / *per_decade as f64))
                    .collect()
            }
            FrequencyGrid::LogCount { f_min, f_max, count } => {
                if !(f_min > &0.0) || f_max < f_min {
                    return Err(SolveError::Settings(format!("bad log grid {f_min}..{f_max}")));
                }
                match count {
                    0 => vec![],
                    1 => vec![*f_min],
                    _ => {
                        let span = (f_max / f_min).log10();
                        (0..*count)
                            .map(|k| f_min * 10f64.powf(span * k as f64 / (*count - 1) as f64))
                            .collect()
                    }
                }
            }
        };
        if out.iter().any(|f| !(f.is_finite() && *f > 0.0)) {
            return Err(SolveError::Settings("frequencies must be positive".into()));
        }
        if out.windows(2).any(|w| w[1] <= w[0]) {
            return Err(SolveError::Settings("frequencies must be strictly ascending".into()));
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveSettings {
    pub orders: Orders,
    pub grid: FrequencyGrid,
}

impl Default for SolveSettings {
    fn default() -> Self {
        Self {
            orders: Orders::default(),
            grid: FrequencyGrid::Explicit(vec![]),
        }
    }
}

impl SolveSettings {
    pub fn uniform(order: usize, grid: FrequencyGrid) -> Self {
        Self {
            orders: Orders::Uniform(order),
            grid,
        }
    }
}

/// Partial per-unit-length resistance [Ω/m] and inductance [H/m] at one frequency.
#[derive(Debug, Clone)]
pub struct PulResult {
    pub frequency: f64,
    pub r: Mat<f64>,
    pub l: Mat<f64>,
    pub orders: Vec<usize>,
    pub geometry_hash: String,
    /// Condition estimate of `1 − jωμ0 Y_s G`.
    pub condition: f64,
}

impl PulResult {
    pub fn omega(&self) -> f64 {
        2.0 * PI * self.frequency
    }

    /// `Z = R + jωL`.
    pub fn impedance(&self) -> Mat<c64> {
        let w = self.omega();
        Mat::from_fn(self.r.nrows(), self.r.ncols(), |i, j| {
            c64::new(self.r[(i, j)], w * self.l[(i, j)])
        })
    }

    pub fn from_impedance(frequency: f64, z: &Mat<c64>, orders: Vec<usize>, hash: String, condition: f64) -> Self {
        let w = 2.0 * PI * frequency;
        Self {
            frequency,
            r: Mat::from_fn(z.nrows(), z.ncols(), |i, j| z[(i, j)].re),
            l: Mat::from_fn(z.nrows(), z.ncols(), |i, j| z[(i, j)].im / w),
            orders,
            geometry_hash: hash,
            condition,
        }
    }
}

/// Everything produced by one frequency solve.
pub struct SystemSolution {
    pub omega: f64,
    pub ys: SurfaceAdmittance,
    /// `A⁻¹ Y_s U`, size `N × P`.
    pub response: Mat<c64>,
    /// Partial impedance `Z`, size `P × P`.
    pub z: Mat<c64>,
    pub condition: f64,
}

pub fn solve_system(
    cs: &CrossSection,
    layout: &HarmonicLayout,
    omega: f64,
    green: &GreenMatrix,
) -> Result<SystemSolution, SolveError> {
    layout.check(cs)?;
    if &green.layout != layout || green.data.nrows() != layout.size() {
        return Err(SolveError::GreenMismatch);
    }
    let ys = assemble_ys(cs, layout, omega)?;
    let size = layout.size();
    let count = cs.len();
    let scale = c64::new(0.0, -omega * MU0);
    let g = &green.data;
    let a = Mat::<c64>::from_fn(size, size, |i, j| {
        let v = scale * ys.diagonal[i] * g[(i, j)];
        if i == j {
            v + 1.0
        } else {
            v
        }
    });
    let lu = Lu::factor(a).map_err(|_| SolveError::IllConditioned {
        what: "moment matrix",
        condition: f64::INFINITY,
    })?;
    let condition = lu.condition_estimate();
    if !(condition < CONDITION_FAIL) {
        return Err(SolveError::IllConditioned {
            what: "moment matrix",
            condition,
        });
    }
    if condition > CONDITION_WARN {
        log::warn!("moment matrix condition estimate {condition:e} at omega = {omega}");
    }
    let mut response = Mat::<c64>::zeros(size, count);
    for p in 0..count {
        let k = layout.index(p, 0);
        response[(k, p)] = ys.diagonal[k];
    }
    lu.solve_in_place(response.as_mut());
    let admittance = Mat::<c64>::from_fn(count, count, |p, r| response[(layout.index(p, 0), r)]);
    let (z, cond_small) = inverse_with_condition(&admittance).map_err(|e| match e {
        LinalgError::Singular { .. } | LinalgError::NotSquare { .. } => SolveError::IllConditioned {
            what: "conductor admittance",
            condition: f64::INFINITY,
        },
    })?;
    if !(cond_small < CONDITION_FAIL) {
        return Err(SolveError::IllConditioned {
            what: "conductor admittance",
            condition: cond_small,
        });
    }
    Ok(SystemSolution {
        omega,
        ys,
        response,
        z,
        condition,
    })
}

/// Partial `R`, `L` matrices at angular frequency `omega`.
pub fn pul_partial(
    cs: &CrossSection,
    settings: &SolveSettings,
    omega: f64,
    green: &GreenMatrix,
) -> Result<PulResult, SolveError> {
    let layout = settings.orders.layout(cs)?;
    let sol = solve_system(cs, &layout, omega, green)?;
    Ok(PulResult::from_impedance(
        omega / (2.0 * PI),
        &sol.z,
        layout.orders().to_vec(),
        green.geometry_hash.clone(),
        sol.condition,
    ))
}

/// Sweep output plus instrumentation.
#[derive(Debug, Clone)]
pub struct SweepOutput {
    pub results: Vec<PulResult>,
    /// Number of Green-matrix assemblies performed by this sweep.
    pub green_assemblies: usize,
    pub green_seconds: f64,
    /// Wall time of every frequency sample, in grid order.
    pub sample_seconds: Vec<f64>,
}

/// Assembles `G` once and solves every frequency of the grid against it.
pub fn sweep(cs: &CrossSection, settings: &SolveSettings) -> Result<SweepOutput, SolveError> {
    let freqs = settings.grid.frequencies()?;
    let layout = settings.orders.layout(cs)?;
    let t = Instant::now();
    let green = assemble_green(cs, &layout)?;
    let green_seconds = t.elapsed().as_secs_f64();
    let mut out = sweep_with_green(cs, settings, &freqs, &green)?;
    out.green_assemblies = 1;
    out.green_seconds = green_seconds;
    Ok(out)
}

/// Solves every frequency against a prebuilt (e.g. cached) Green matrix.
pub fn sweep_with_green(
    cs: &CrossSection,
    settings: &SolveSettings,
    freqs: &[f64],
    green: &GreenMatrix,
) -> Result<SweepOutput, SolveError> {
    let timed: Vec<(PulResult, f64)> = freqs
        .par_iter()
        .map(|&f| {
            let t = Instant::now();
            pul_partial(cs, settings, 2.0 * PI * f, green)
                .map(|mut r| {
                    r.frequency = f;
                    (r, t.elapsed().as_secs_f64())
                })
                .map_err(|e| SolveError::AtFrequency {
                    frequency: f,
                    source: Box::new(e),
                })
        })
        .collect::<Result<_, _>>()?;
    let (results, sample_seconds) = timed.into_iter().unzip();
    Ok(SweepOutput {
        results,
        green_assemblies: 0,
        green_seconds: 0.0,
        sample_seconds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::two_wire;

    #[test]
    fn log_grids() {
        let f = FrequencyGrid::LogPerDecade {
            f_min: 1.0,
            f_max: 1e6,
            per_decade: 5,
        }
        .frequencies()
        .unwrap();
        assert_eq!(f.len(), 31);
        assert!((f[30] - 1e6).abs() < 1e-6);
        let f = FrequencyGrid::LogCount {
            f_min: 1.0,
            f_max: 1e6,
            count: 15,
        }
        .frequencies()
        .unwrap();
        assert_eq!(f.len(), 15);
        assert!((f[14] - 1e6).abs() < 1e-6);
        assert!(FrequencyGrid::Explicit(vec![2.0, 1.0]).frequencies().is_err());
        assert!(FrequencyGrid::Explicit(vec![0.0]).frequencies().is_err());
        assert!(FrequencyGrid::Explicit(vec![]).frequencies().unwrap().is_empty());
    }

    #[test]
    fn mirror_symmetric_pair_has_equal_self_terms() {
        let cs = two_wire(0.01, 0.1);
        let settings = SolveSettings::uniform(3, FrequencyGrid::Explicit(vec![1e6]));
        let out = sweep(&cs, &settings).unwrap();
        let r = &out.results[0];
        assert!((r.r[(0, 0)] - r.r[(1, 1)]).abs() < 1e-12 * r.r[(0, 0)]);
        assert!((r.l[(0, 0)] - r.l[(1, 1)]).abs() < 1e-12 * r.l[(0, 0)].abs());
        assert!((r.r[(0, 1)] - r.r[(1, 0)]).abs() < 1e-10 * r.r[(0, 0)]);
    }

    #[test]
    fn empty_grid_gives_no_results() {
        let cs = two_wire(0.01, 0.1);
        let out = sweep(&cs, &SolveSettings::uniform(2, FrequencyGrid::Explicit(vec![]))).unwrap();
        assert!(out.results.is_empty());
        assert_eq!(out.green_assemblies, 1);
    }

    #[test]
    fn green_mismatch_is_rejected() {
        let cs = two_wire(0.01, 0.1);
        let g = assemble_green(&cs, &HarmonicLayout::uniform(2, 1)).unwrap();
        let settings = SolveSettings::uniform(2, FrequencyGrid::Explicit(vec![]));
        assert!(matches!(
            pul_partial(&cs, &settings, 1.0, &g),
            Err(SolveError::GreenMismatch)
        ));
    }

    #[test]
    fn non_conducting_wire_is_ill_conditioned() {
        let mut cs = two_wire(0.01, 0.1);
        cs.conductors[1].conductivity = 0.0;
        let settings = SolveSettings::uniform(1, FrequencyGrid::Explicit(vec![50.0]));
        let err = sweep(&cs, &settings).unwrap_err();
        match err {
            SolveError::AtFrequency { frequency, source } => {
                assert_eq!(frequency, 50.0);
                assert!(matches!(*source, SolveError::IllConditioned { .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
