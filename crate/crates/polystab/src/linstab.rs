//! Linear stability analysis: the Jacobian of the planar system, its
//! eigenvalues in closed form and through an independent 2x2 solver, and
//! the sink/saddle/spiral classification of each equilibrium.

use num_complex::Complex64;

use crate::domain::{
    boundary_at, CriticalPoint, PolytropeConfig, StabilityClassification, StabilityVerdict,
    ZERO_TOL,
};

/// A 2x2 real matrix, row-major. For this system the first row is
/// always `[0, 1]` (companion structure of the first-order reduction).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jacobian2 {
    pub a11: f64,
    pub a12: f64,
    pub a21: f64,
    pub a22: f64,
}

impl Jacobian2 {
    pub fn trace(&self) -> f64 {
        self.a11 + self.a22
    }

    pub fn det(&self) -> f64 {
        self.a11 * self.a22 - self.a12 * self.a21
    }
}

/// Jacobian of the vector field evaluated where `B^(n-1) w^(n-1)` takes
/// the value `power_term`:
///
/// ```text
/// [ 0                                   1           ]
/// [ 2(n-3)/(n-1)^2 - n power_term    (n-5)/(n-1) ]
/// ```
pub fn jacobian(config: PolytropeConfig, power_term: f64) -> Jacobian2 {
    let n = config.index();
    Jacobian2 {
        a11: 0.0,
        a12: 1.0,
        a21: 2.0 * (n - 3.0) / ((n - 1.0) * (n - 1.0)) - n * power_term,
        a22: (n - 5.0) / (n - 1.0),
    }
}

/// Eigenvalues of the Jacobian in closed form,
///
/// ```text
/// lambda_pm = (n-5)/(2(n-1)) +- (1/2) sqrt(1 - 4 n power_term),
/// ```
///
/// sorted by descending real part, then descending imaginary part. A
/// negative radicand yields a conjugate complex pair.
pub fn eigenvalues_closed_form(
    config: PolytropeConfig,
    power_term: f64,
) -> (Complex64, Complex64) {
    let n = config.index();
    let center = (n - 5.0) / (2.0 * (n - 1.0));
    let radicand = 1.0 - 4.0 * n * power_term;
    if radicand >= 0.0 {
        let half_root = 0.5 * radicand.sqrt();
        (
            Complex64::new(center + half_root, 0.0),
            Complex64::new(center - half_root, 0.0),
        )
    } else {
        let half_root = 0.5 * (-radicand).sqrt();
        (
            Complex64::new(center, half_root),
            Complex64::new(center, -half_root),
        )
    }
}

/// Roots of `lambda^2 - tr(J) lambda + det(J)` through the numerically
/// stable quadratic formula, sorted by descending real part, then
/// descending imaginary part. Kept independent of the closed form so the
/// two routes can cross-check each other.
pub fn eigenvalues_numeric(j: &Jacobian2) -> (Complex64, Complex64) {
    let trace = j.trace();
    let det = j.det();
    let disc = trace * trace - 4.0 * det;
    if disc >= 0.0 {
        let root = disc.sqrt();
        // Avoid cancellation: compute the larger-magnitude root first,
        // recover the other from the product of roots.
        let q = 0.5 * (trace + trace.signum() * root);
        let (r1, r2) = if q == 0.0 {
            (0.5 * root, -0.5 * root)
        } else {
            (q, det / q)
        };
        let (hi, lo) = if r1 >= r2 { (r1, r2) } else { (r2, r1) };
        (Complex64::new(hi, 0.0), Complex64::new(lo, 0.0))
    } else {
        let re = 0.5 * trace;
        let im = 0.5 * (-disc).sqrt();
        (Complex64::new(re, im), Complex64::new(re, -im))
    }
}

/// Classifies one equilibrium from the signs and reality of its computed
/// eigenvalues. Indices within tolerance of a regime boundary, a
/// vanishing discriminant, or a real part within [`ZERO_TOL`] of zero
/// all map to [`StabilityClassification::Boundary`].
pub fn classify_linear(
    config: PolytropeConfig,
    point: &CriticalPoint,
) -> (StabilityClassification, StabilityVerdict) {
    let n = config.index();
    if boundary_at(n).is_some() {
        return (StabilityClassification::Boundary, StabilityVerdict::Inconclusive);
    }
    let power_term = point.power_term();
    if 1.0 - 4.0 * n * power_term == 0.0 {
        // Repeated eigenvalue; degenerate node left unclassified.
        return (StabilityClassification::Boundary, StabilityVerdict::Inconclusive);
    }
    let (plus, minus) = eigenvalues_closed_form(config, power_term);
    let classification = if plus.im != 0.0 {
        if plus.re > ZERO_TOL {
            StabilityClassification::SpiralSource
        } else if plus.re < -ZERO_TOL {
            StabilityClassification::SpiralSink
        } else {
            StabilityClassification::Boundary
        }
    } else if plus.re.abs() <= ZERO_TOL || minus.re.abs() <= ZERO_TOL {
        StabilityClassification::Boundary
    } else if plus.re < 0.0 {
        StabilityClassification::NodalSink
    } else if minus.re < 0.0 {
        StabilityClassification::SaddlePoint
    } else {
        // Both real parts positive would need trace > 0, i.e. n > 5; the
        // origin then has det < 0 (saddle) and the nontrivial point has a
        // complex pair, so a nodal source cannot arise for n > 1.
        unreachable!("nodal source is unreachable for admissible configurations")
    };
    let verdict = match classification {
        StabilityClassification::NodalSink | StabilityClassification::SpiralSink => {
            StabilityVerdict::Stable
        }
        StabilityClassification::SaddlePoint | StabilityClassification::SpiralSource => {
            StabilityVerdict::Unstable
        }
        StabilityClassification::Boundary => StabilityVerdict::Inconclusive,
    };
    (classification, verdict)
}
