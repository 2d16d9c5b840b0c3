//! The autonomous-system form of the structure equation: the force
//! function, the planar vector field `dw/dt = q`, `dq/dt = -2 G1(w, q)`,
//! and the closed-form location of its equilibria.

use crate::domain::{AutonomousState, CriticalPoint, PolytropeConfig, BOUNDARY_TOL};
use crate::{Error, Result};

/// `base^exponent` over the reals. A negative base with a non-integer
/// exponent has no real value and is reported as a domain error; `w` is
/// a scaled density and only its non-negative range is physical.
pub(crate) fn real_power(base: f64, exponent: f64) -> Result<f64> {
    if base < 0.0 && exponent.fract() != 0.0 {
        return Err(Error::FractionalPowerOfNegative { base, exponent });
    }
    Ok(base.powf(exponent))
}

/// The value of `B^(n-1) w0^(n-1)` at the nontrivial equilibrium,
/// `2(n-3)/(n-1)^2`. Real for every `n > 1`: negative below `n = 3`,
/// zero at `n = 3`, positive above.
pub(crate) fn nontrivial_power_term(n: f64) -> f64 {
    2.0 * (n - 3.0) / ((n - 1.0) * (n - 1.0))
}

/// Value of the planar vector field at one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorFieldValue {
    pub dw: f64,
    pub dq: f64,
}

/// The force function of the second-order form `w'' + 2 G1(w, w') = 0`:
///
/// ```text
/// G1(w, q) = 1/2 [ -(n-5)/(n-1) q + 2(3-n)/(n-1)^2 w + B^(n-1) w^n ]
/// ```
///
/// `G1(0, 0) = 0` for every configuration.
pub fn g1(config: PolytropeConfig, w: f64, q: f64) -> Result<f64> {
    let n = config.index();
    let b = config.scale();
    let wn = real_power(w, n)?;
    Ok(0.5
        * (-(n - 5.0) / (n - 1.0) * q
            + 2.0 * (3.0 - n) / ((n - 1.0) * (n - 1.0)) * w
            + b.powf(n - 1.0) * wn))
}

/// `dw/dt = q`, `dq/dt = -2 G1(w, q)`.
pub fn vector_field(config: PolytropeConfig, s: &AutonomousState) -> Result<VectorFieldValue> {
    Ok(VectorFieldValue {
        dw: s.q,
        dq: -2.0 * g1(config, s.w, s.q)?,
    })
}

/// Equilibria of the system for one configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalPointSet {
    /// The origin first, then the nontrivial equilibrium when distinct.
    pub points: Vec<CriticalPoint>,
    /// True when the index sits at the merge boundary `n = 3` and the
    /// nontrivial equilibrium coincides with the origin; only the origin
    /// is then reported.
    pub merged: bool,
}

/// Locates every equilibrium in closed form. The origin is always
/// present. The nontrivial equilibrium carries the power term
/// `2(n-3)/(n-1)^2` for all `n > 1` and a real coordinate
/// `w0 = (1/B) [2(n-3)/(n-1)^2]^(1/(n-1))` only for `n > 3`.
pub fn critical_points(config: PolytropeConfig) -> CriticalPointSet {
    let n = config.index();
    if (n - 3.0).abs() <= BOUNDARY_TOL {
        return CriticalPointSet {
            points: vec![CriticalPoint::origin()],
            merged: true,
        };
    }
    let power_term = nontrivial_power_term(n);
    let w0 = (n > 3.0).then(|| power_term.powf(1.0 / (n - 1.0)) / config.scale());
    CriticalPointSet {
        points: vec![
            CriticalPoint::origin(),
            CriticalPoint::nontrivial(w0, power_term),
        ],
        merged: false,
    }
}

/// `|G1(w0, 0)|` at a point with a real coordinate; `None` for formal
/// points. Points produced by [`critical_points`] satisfy
/// `residual <= 1e-12`.
pub fn residual(config: PolytropeConfig, point: &CriticalPoint) -> Option<f64> {
    let w0 = point.coordinate()?;
    Some(g1(config, w0, 0.0).expect("equilibrium coordinates are non-negative").abs())
}
