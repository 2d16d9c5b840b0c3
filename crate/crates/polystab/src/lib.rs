//! Stability analysis of self-gravitating polytropic gas spheres.
//!
//! The structure of a Newtonian polytrope of index `n` is governed by the
//! singular second-order equation
//!
//! ```text
//! theta'' + (2/xi) theta' + theta^n = 0,    theta(0) = 1,  theta'(0) = 0,
//! ```
//!
//! which the substitution `theta = B xi^(2/(1-n)) w`, `xi = xi_s e^(-t)`
//! turns into a planar autonomous system in `(w, q = dw/dt)`. This crate
//! locates the equilibria of that system and cross-validates three
//! independent stability verdicts for each one:
//!
//! * [`linstab`] — eigenvalues of the Jacobian (nodal/spiral sinks,
//!   saddles, spiral sources),
//! * [`kcc`] — the deviation curvature of the associated nonlinear
//!   connection, whose sign decides Jacobi stability,
//! * [`lyapunov`] — a candidate Lyapunov function built with the variable
//!   gradient method.
//!
//! [`integrate`] solves both the physical equation and the autonomous
//! system with an adaptive embedded Runge-Kutta pair and checks the
//! results against the closed-form solutions known for `n = 0, 1, 5`.
//! [`cli`] drives everything from the `polystab` binary.
//!
//! ```
//! use polystab::domain::PolytropeConfig;
//! use polystab::{autosys, kcc};
//!
//! let config = PolytropeConfig::with_unit_scale(5.0).unwrap();
//! let points = autosys::critical_points(config);
//! let nontrivial = points.points.last().unwrap();
//!
//! // The nontrivial equilibrium sits at w = 2^(-1/2) and its deviation
//! // curvature is exactly -1, so it is Jacobi stable.
//! assert!((nontrivial.coordinate().unwrap() - 0.5_f64.sqrt()).abs() < 1e-15);
//! assert_eq!(kcc::deviation_curvature(config, nontrivial.power_term()), -1.0);
//! ```
//!
//! All types are immutable plain values and can be shared freely across
//! threads; every analysis function is pure.

pub mod autosys;
pub mod cli;
pub mod domain;
pub mod integrate;
pub mod kcc;
pub mod linstab;
pub mod lyapunov;
pub mod report;
pub mod rk45;

/// Errors produced by configuration validation, domain-restricted
/// evaluations and the integrators.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("polytropic index must be a finite number greater than 1, got {0}")]
    InvalidIndex(f64),
    #[error("physical index must be a finite number >= 0, got {0}")]
    InvalidPhysicalIndex(f64),
    #[error("scale constant must be positive and finite, got {0}")]
    InvalidScale(f64),
    #[error("cannot raise negative base {base} to non-integer power {exponent}")]
    FractionalPowerOfNegative { base: f64, exponent: f64 },
    #[error("Milne variables need theta > 0 and dtheta < 0, got theta = {theta}, dtheta = {dtheta}")]
    MilneUndefined { theta: f64, dtheta: f64 },
    #[error("physical ratios must be positive and finite, got {0}")]
    NonPositiveRatio(f64),
    #[error("series start offset must satisfy 0 < xi0 <= 1e-2, got {0}")]
    SeriesOffsetRange(f64),
    #[error("tolerance must lie within [1e-14, 1e-4], got {0}")]
    ToleranceRange(f64),
    #[error("integration span must run forward, got start {start}, end {end}")]
    EmptySpan { start: f64, end: f64 },
    #[error("surface scale xi_s must be positive and finite, got {0}")]
    InvalidSurfaceScale(f64),
    #[error("radial coordinate must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("step size underflow at xi = {xi} (theta = {theta}, dtheta = {dtheta})")]
    StepSizeUnderflow { xi: f64, theta: f64, dtheta: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
