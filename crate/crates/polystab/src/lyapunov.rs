//! Lyapunov-function analysis. The variable gradient method, seeded with
//! the vector field itself, yields the candidate
//!
//! ```text
//! V(w, q) = q^2/2 - (n-3)/(n-1)^2 w^2 + B^(n-1)/(n+1) w^(n+1),
//! ```
//!
//! whose gradient vanishes exactly at the equilibria and whose derivative
//! along the flow is `(n-5)/(n-1) q^2`. A certificate requires both a
//! Hessian-verified local minimum and a negative flow derivative; when
//! either fails the method is silent, so the verdict is never "unstable".

use crate::autosys::real_power;
use crate::domain::{CriticalPoint, PolytropeConfig, StabilityVerdict, ZERO_TOL};
use crate::Result;

/// Outcome of the Lyapunov test at one equilibrium.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LyapunovAssessment {
    /// Eigenvalues of the (diagonal) Hessian of `V` at the point; the
    /// second one is always 1.
    pub hessian_eigenvalues: (f64, f64),
    /// Whether the Hessian certifies a strict local minimum.
    pub is_local_minimum: bool,
    /// `(n-5)/(n-1)`: the derivative of `V` along the flow is this
    /// coefficient times `q^2`.
    pub vdot_coefficient: f64,
    pub verdict: StabilityVerdict,
}

/// The candidate function `V(w, q)`.
pub fn v(config: PolytropeConfig, w: f64, q: f64) -> Result<f64> {
    let n = config.index();
    let b = config.scale();
    let w_pow = real_power(w, n + 1.0)?;
    Ok(0.5 * q * q - (n - 3.0) / ((n - 1.0) * (n - 1.0)) * w * w
        + b.powf(n - 1.0) / (n + 1.0) * w_pow)
}

/// Gradient of `V`; vanishes exactly at the equilibria.
pub fn grad_v(config: PolytropeConfig, w: f64, q: f64) -> Result<(f64, f64)> {
    let n = config.index();
    let b = config.scale();
    let wn = real_power(w, n)?;
    Ok((
        -2.0 * (n - 3.0) / ((n - 1.0) * (n - 1.0)) * w + b.powf(n - 1.0) * wn,
        q,
    ))
}

/// Eigenvalues of the diagonal Hessian of `V` where `B^(n-1) w^(n-1)`
/// takes the value `power_term`:
/// `lambda_1 = -2(n-3)/(n-1)^2 + n power_term`, `lambda_2 = 1`.
pub fn hessian_eigenvalues(config: PolytropeConfig, power_term: f64) -> (f64, f64) {
    let n = config.index();
    (
        -2.0 * (n - 3.0) / ((n - 1.0) * (n - 1.0)) + n * power_term,
        1.0,
    )
}

/// `(n-5)/(n-1)`; `dV/dt` along the flow equals this coefficient times
/// `q^2`, so it is non-positive exactly for `n <= 5`.
pub fn v_dot_coefficient(config: PolytropeConfig) -> f64 {
    let n = config.index();
    (n - 5.0) / (n - 1.0)
}

/// Runs the Lyapunov test at one equilibrium. `AsymptoticallyStable`
/// needs a certified local minimum together with a strictly negative
/// flow-derivative coefficient; everything else is `Inconclusive` — a
/// failed candidate proves nothing about instability.
pub fn classify_lyapunov(config: PolytropeConfig, point: &CriticalPoint) -> LyapunovAssessment {
    let eigenvalues = hessian_eigenvalues(config, point.power_term());
    let is_local_minimum = eigenvalues.0 > ZERO_TOL;
    let vdot_coefficient = v_dot_coefficient(config);
    let verdict = if is_local_minimum && vdot_coefficient < -ZERO_TOL {
        StabilityVerdict::AsymptoticallyStable
    } else {
        StabilityVerdict::Inconclusive
    };
    LyapunovAssessment {
        hessian_eigenvalues: eigenvalues,
        is_local_minimum,
        vdot_coefficient,
        verdict,
    }
}
