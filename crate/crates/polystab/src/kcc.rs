//! Geometric (Jacobi) stability of the planar system, obtained by
//! geometrizing the second-order equation `w'' + 2 G1(w, w') = 0` rather
//! than linearizing it. For a single second-order equation the chain of
//! invariants collapses to scalars:
//!
//! * the nonlinear connection `N = dG1/dq`, constant for this system;
//! * the Berwald connection `dN/dq`, identically zero;
//! * the deviation curvature `P = -2 dG1/dw + N^2`, whose strict
//!   negativity along a trajectory makes whole-trajectory perturbations
//!   decay (Jacobi stability). The third invariant is a torsion built by
//!   antisymmetrizing over a single index, hence identically zero here;
//!   the higher curvature-type invariants are structureless in one
//!   dimension and are not represented.

use crate::autosys::real_power;
use crate::domain::{CriticalPoint, MilneState, PolytropeConfig, StabilityVerdict, ZERO_TOL};
use crate::{Error, Result};

/// The scalar invariants evaluated at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KccInvariants {
    pub nonlinear_connection: f64,
    pub berwald: f64,
    pub deviation_curvature: f64,
}

/// `dG1/dq = -(n-5)/(2(n-1))`, independent of the state.
pub fn nonlinear_connection(config: PolytropeConfig) -> f64 {
    let n = config.index();
    -(n - 5.0) / (2.0 * (n - 1.0))
}

/// The Berwald connection vanishes identically: the nonlinear connection
/// does not depend on `q`.
pub fn berwald_connection(_config: PolytropeConfig) -> f64 {
    0.0
}

/// The third invariant antisymmetrizes the derivative of the deviation
/// curvature over a single index and is therefore identically zero in one
/// dimension.
pub fn torsion_invariant(_config: PolytropeConfig) -> f64 {
    0.0
}

/// Deviation curvature where `B^(n-1) w^(n-1)` takes the value
/// `power_term`:
///
/// ```text
/// P = 1/4 - n power_term.
/// ```
pub fn deviation_curvature(config: PolytropeConfig, power_term: f64) -> f64 {
    0.25 - config.index() * power_term
}

/// All scalar invariants at one evaluation point.
pub fn invariants(config: PolytropeConfig, power_term: f64) -> KccInvariants {
    KccInvariants {
        nonlinear_connection: nonlinear_connection(config),
        berwald: berwald_connection(config),
        deviation_curvature: deviation_curvature(config, power_term),
    }
}

/// Deviation curvature in Milne's homological variables,
/// `P = 1/4 - n u v`. Along a profile `u v = xi^2 theta^(n-1)`, so this
/// agrees with [`deviation_curvature`] under the phase-space transform
/// for every scale constant.
pub fn deviation_curvature_physical(n: f64, u: f64, v: f64) -> f64 {
    0.25 - n * u * v
}

/// Jacobi stability test in stellar observables: `density_ratio` is
/// `rho(r)` over the mean density inside `r`, `energy_ratio` is the
/// internal over gravitational energy per unit mass. The trajectory is
/// Jacobi stable at the point exactly when the deviation curvature is
/// negative under `u = 3 density_ratio`, `v = (3/2) / energy_ratio`,
/// which works out to `energy_ratio < 18 n density_ratio`.
pub fn jacobi_condition_physical(n: f64, density_ratio: f64, energy_ratio: f64) -> Result<bool> {
    for ratio in [density_ratio, energy_ratio] {
        if !ratio.is_finite() || ratio <= 0.0 {
            return Err(Error::NonPositiveRatio(ratio));
        }
    }
    let milne = MilneState {
        u: 3.0 * density_ratio,
        v: 1.5 / energy_ratio,
    };
    Ok(deviation_curvature_physical(n, milne.u, milne.v) < 0.0)
}

/// Deviation curvature at an equilibrium and the resulting verdict. In
/// one dimension the deviation tensor has the curvature itself as its
/// only eigenvalue, so the verdict is its sign: strictly negative is
/// stable, strictly positive unstable, and anything within [`ZERO_TOL`]
/// of zero inconclusive.
pub fn classify_jacobi(config: PolytropeConfig, point: &CriticalPoint) -> (f64, StabilityVerdict) {
    let curvature = deviation_curvature(config, point.power_term());
    let verdict = if curvature.abs() <= ZERO_TOL {
        StabilityVerdict::Inconclusive
    } else if curvature < 0.0 {
        StabilityVerdict::Stable
    } else {
        StabilityVerdict::Unstable
    };
    (curvature, verdict)
}

/// Deviation curvature along a physical profile point,
/// `P = 1/4 - n xi^2 theta^(n-1)`, defined for `theta > 0`.
pub(crate) fn deviation_curvature_profile(n: f64, xi: f64, theta: f64) -> Result<f64> {
    if n == 0.0 {
        return Ok(0.25);
    }
    Ok(0.25 - n * xi * xi * real_power(theta, n - 1.0)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autosys::critical_points;
    use crate::domain::critical_index_nstar;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn config(n: f64, b: f64) -> PolytropeConfig {
        PolytropeConfig::new(n, b).unwrap()
    }

    #[test]
    fn nonlinear_connection_values() {
        assert_eq!(nonlinear_connection(config(5.0, 1.0)), 0.0);
        assert_relative_eq!(nonlinear_connection(config(3.0, 1.0)), 0.5, epsilon = 1e-15);
        assert_relative_eq!(nonlinear_connection(config(2.0, 1.0)), 1.5, epsilon = 1e-15);
    }

    #[test]
    fn berwald_and_torsion_vanish_everywhere() {
        for n in [1.5, 2.0, 3.7, 5.0, 9.0] {
            for b in [0.5, 1.0, 4.0] {
                assert_eq!(berwald_connection(config(n, b)), 0.0);
                assert_eq!(torsion_invariant(config(n, b)), 0.0);
            }
        }
    }

    #[test]
    fn deviation_curvature_values() {
        // At the origin the curvature is 1/4 regardless of n and B.
        for n in [1.5, 2.0, 4.0, 8.0] {
            for b in [0.5, 1.0, 3.0] {
                assert_eq!(deviation_curvature(config(n, b), 0.0), 0.25);
            }
        }
        assert_eq!(deviation_curvature(config(5.0, 1.0), 0.25), -1.0);
        assert_relative_eq!(
            deviation_curvature(config(4.0, 1.0), 2.0 / 9.0),
            -23.0 / 36.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn physical_form_hand_evaluations() {
        assert_eq!(deviation_curvature_physical(3.0, 0.0, 7.0), 0.25);
        // Exact n = 5 profile at xi = sqrt(3): u = 3/2, v = 1/2.
        assert_relative_eq!(deviation_curvature_physical(5.0, 1.5, 0.5), -3.5, epsilon = 1e-15);
        assert_relative_eq!(
            deviation_curvature_profile(5.0, 3.0f64.sqrt(), 0.5f64.sqrt()).unwrap(),
            -3.5,
            epsilon = 1e-12
        );
    }

    #[test]
    fn physical_condition_examples() {
        assert_eq!(jacobi_condition_physical(5.0, 1.0, 1.0), Ok(true));
        assert_eq!(jacobi_condition_physical(2.0, 0.01, 1.0), Ok(false));
        assert!(matches!(
            jacobi_condition_physical(2.0, 0.0, 1.0),
            Err(Error::NonPositiveRatio(_))
        ));
        assert!(matches!(
            jacobi_condition_physical(2.0, 1.0, -0.3),
            Err(Error::NonPositiveRatio(_))
        ));
    }

    #[test]
    fn physical_condition_agrees_with_curvature_sign() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n: f64 = rng.random_range(1.1..9.0);
            let density: f64 = rng.random_range(1e-3..10.0);
            let energy: f64 = rng.random_range(1e-3..10.0);
            let condition = jacobi_condition_physical(n, density, energy).unwrap();
            let curvature = deviation_curvature_physical(n, 3.0 * density, 1.5 / energy);
            assert_eq!(condition, curvature < 0.0, "n={n} d={density} e={energy}");
            assert_eq!(condition, energy < 18.0 * n * density);
        }
    }

    #[test]
    fn classification_examples() {
        let set = critical_points(config(2.0, 1.0));
        let (value, verdict) = classify_jacobi(config(2.0, 1.0), &set.points[0]);
        assert_eq!(value, 0.25);
        assert_eq!(verdict, StabilityVerdict::Unstable);

        let set = critical_points(config(4.0, 1.0));
        let (value, verdict) = classify_jacobi(config(4.0, 1.0), &set.points[1]);
        assert_relative_eq!(value, -23.0 / 36.0, epsilon = 1e-15);
        assert_eq!(verdict, StabilityVerdict::Stable);

        let set = critical_points(config(3.1, 1.0));
        let (value, verdict) = classify_jacobi(config(3.1, 1.0), &set.points[1]);
        assert_relative_eq!(value, 1.93 / 17.64, epsilon = 1e-12);
        assert_eq!(verdict, StabilityVerdict::Unstable);
    }

    #[test]
    fn curvature_at_equilibria_is_scale_invariant() {
        for n in [2.0, 3.4, 4.5, 7.0] {
            let reference: Vec<f64> = critical_points(config(n, 1.0))
                .points
                .iter()
                .map(|p| classify_jacobi(config(n, 1.0), p).0)
                .collect();
            for b in [0.5, 2.0, 10.0] {
                let values: Vec<f64> = critical_points(config(n, b))
                    .points
                    .iter()
                    .map(|p| classify_jacobi(config(n, b), p).0)
                    .collect();
                assert_eq!(values, reference);
            }
        }
    }

    #[test]
    fn curvature_sign_tracks_the_eigenvalue_discriminant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let nstar = critical_index_nstar();
        let mut checked = 0;
        while checked < 1000 {
            let n: f64 = rng.random_range(1.0000001..10.0);
            if (n - 3.0).abs() <= 1e-9 || (n - nstar).abs() <= 1e-9 {
                continue;
            }
            let cfg = config(n, 1.0);
            let set = critical_points(cfg);
            let xn = set.points[1];
            let curvature = classify_jacobi(cfg, &xn).0;
            let disc = 1.0 + 22.0 * n - 7.0 * n * n;
            assert_eq!(curvature > 0.0, disc > 0.0, "n = {n}");
            let (plus, _) = crate::linstab::eigenvalues_closed_form(cfg, xn.power_term());
            assert_eq!(curvature < 0.0, plus.im != 0.0, "n = {n}");
            checked += 1;
        }
    }
}
