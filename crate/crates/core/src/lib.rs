//! Per-unit-length series impedance of systems of round conductors,
//! including skin and proximity effects, via a surface admittance operator
//! and a Fourier-harmonic moment method.

pub mod cli;
pub mod geometry;
pub mod green;
pub mod linalg;
pub mod operator;
pub mod oracles;
pub mod solver;
pub mod specfun;

pub use geometry::{Conductor, Connection, CrossSection, HarmonicLayout, Role, EPS0, MU0};
pub use green::{assemble_green, GreenMatrix};
pub use solver::{pul_partial, sweep, FrequencyGrid, Orders, PulResult, SolveError, SolveSettings};
