//! Core value types shared by every analysis layer: the problem
//! configuration, phase-space states, equilibria, and the classification
//! vocabulary.

use crate::{Error, Result};

/// Indices within this distance of a regime boundary are treated as
/// sitting exactly on it; classifiers then report
/// [`StabilityClassification::Boundary`] instead of guessing a side.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// Zero tolerance for sign decisions on eigenvalue real parts and
/// curvature values.
pub const ZERO_TOL: f64 = 1e-9;

/// The index at which the eigenvalues of the nontrivial equilibrium turn
/// complex: `(11 + 8*sqrt(2))/7 = 3.187672...`. It is the positive root
/// of `7 n^2 - 22 n - 1`.
pub fn critical_index_nstar() -> f64 {
    (11.0 + 8.0 * std::f64::consts::SQRT_2) / 7.0
}

/// One problem instance: the polytropic index `n > 1` and the positive
/// scale constant `B` of the density substitution. `B` rescales the `w`
/// coordinate but never a classification; it defaults to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolytropeConfig {
    n: f64,
    b: f64,
}

impl PolytropeConfig {
    pub fn new(n: f64, b: f64) -> Result<Self> {
        if !n.is_finite() || n <= 1.0 {
            return Err(Error::InvalidIndex(n));
        }
        if !b.is_finite() || b <= 0.0 {
            return Err(Error::InvalidScale(b));
        }
        Ok(Self { n, b })
    }

    /// Configuration with `B = 1`, the normalization used throughout the
    /// classification tables.
    pub fn with_unit_scale(n: f64) -> Result<Self> {
        Self::new(n, 1.0)
    }

    pub fn index(&self) -> f64 {
        self.n
    }

    pub fn scale(&self) -> f64 {
        self.b
    }
}

/// A point of the transformed phase space together with its logarithmic
/// radial coordinate `t = ln(xi_s/xi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AutonomousState {
    /// Transformed density variable.
    pub w: f64,
    /// `dw/dt`.
    pub q: f64,
    /// Logarithmic radial coordinate; grows toward the center.
    pub t: f64,
}

/// A point along a stellar profile in the physical variables of the
/// structure equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalState {
    /// Dimensionless radius.
    pub xi: f64,
    /// Dimensionless density variable, `rho = rho_c theta^n`.
    pub theta: f64,
    /// `d theta / d xi`.
    pub dtheta: f64,
}

/// Milne's homological variables: `u` is three times the local over mean
/// density, `v` is 3/2 of the ratio of gravitational to internal energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MilneState {
    pub u: f64,
    pub v: f64,
}

/// The two equilibria of the autonomous system, both on the `q = 0` line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalPointKind {
    /// The origin `(0, 0)`, present for every index.
    X0,
    /// The nontrivial equilibrium. Its `w` coordinate is real only for
    /// `n > 3`; the associated power term is real for all `n > 1`.
    Xn,
}

impl CriticalPointKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CriticalPointKind::X0 => "X0",
            CriticalPointKind::Xn => "Xn",
        }
    }
}

/// An equilibrium carried together with the value of `B^(n-1) w0^(n-1)`
/// at the point. The power term stays real for every `n > 1`, which lets
/// the eigenvalue, curvature and Hessian formulas be evaluated even when
/// the coordinate itself is not real (1 < n < 3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalPoint {
    kind: CriticalPointKind,
    w0: Option<f64>,
    power_term: f64,
}

impl CriticalPoint {
    pub(crate) fn origin() -> Self {
        Self {
            kind: CriticalPointKind::X0,
            w0: Some(0.0),
            power_term: 0.0,
        }
    }

    pub(crate) fn nontrivial(w0: Option<f64>, power_term: f64) -> Self {
        Self {
            kind: CriticalPointKind::Xn,
            w0,
            power_term,
        }
    }

    pub fn kind(&self) -> CriticalPointKind {
        self.kind
    }

    /// The `w` coordinate, when it is real-valued.
    pub fn coordinate(&self) -> Option<f64> {
        self.w0
    }

    /// `B^(n-1) w0^(n-1)` at the point; zero at the origin.
    pub fn power_term(&self) -> f64 {
        self.power_term
    }

    /// A formal point has no real coordinate; its analyses are carried
    /// out through the power term alone.
    pub fn is_formal(&self) -> bool {
        self.w0.is_none()
    }

    /// The phase-space position `(w0, 0)` at `t = 0`, when real.
    pub fn state(&self) -> Option<AutonomousState> {
        self.w0.map(|w| AutonomousState { w, q: 0.0, t: 0.0 })
    }
}

/// Linear-stability character of an equilibrium, derived from the signs
/// and reality of the Jacobian eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityClassification {
    NodalSink,
    SaddlePoint,
    SpiralSink,
    SpiralSource,
    /// Degenerate cases: the index sits on a regime boundary, the
    /// eigenvalue discriminant vanishes, or a real part is within
    /// [`ZERO_TOL`] of zero.
    Boundary,
}

impl StabilityClassification {
    pub fn as_str(self) -> &'static str {
        match self {
            StabilityClassification::NodalSink => "nodal_sink",
            StabilityClassification::SaddlePoint => "saddle_point",
            StabilityClassification::SpiralSink => "spiral_sink",
            StabilityClassification::SpiralSource => "spiral_source",
            StabilityClassification::Boundary => "boundary",
        }
    }
}

/// Per-method stability verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityVerdict {
    Stable,
    AsymptoticallyStable,
    Unstable,
    Inconclusive,
}

impl StabilityVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            StabilityVerdict::Stable => "stable",
            StabilityVerdict::AsymptoticallyStable => "asymptotically_stable",
            StabilityVerdict::Unstable => "unstable",
            StabilityVerdict::Inconclusive => "inconclusive",
        }
    }

    /// Collapsed vocabulary used by the summary table, where an
    /// asymptotically stable verdict reads simply "stable".
    pub fn table_word(self) -> &'static str {
        match self {
            StabilityVerdict::Stable | StabilityVerdict::AsymptoticallyStable => "stable",
            StabilityVerdict::Unstable => "unstable",
            StabilityVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// The three indices at which the qualitative behavior changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegimeBoundary {
    /// `n = 3`: the nontrivial equilibrium merges with the origin.
    EquilibriaMerge,
    /// `n = (11+8*sqrt(2))/7`: the eigenvalues at the nontrivial
    /// equilibrium turn complex and the deviation curvature changes sign.
    NodeSpiralTransition,
    /// `n = 5`: the damping coefficient `(n-5)/(n-1)` vanishes and
    /// profiles become infinite in extent.
    MarginalDamping,
}

impl RegimeBoundary {
    pub fn value(self) -> f64 {
        match self {
            RegimeBoundary::EquilibriaMerge => 3.0,
            RegimeBoundary::NodeSpiralTransition => critical_index_nstar(),
            RegimeBoundary::MarginalDamping => 5.0,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            RegimeBoundary::EquilibriaMerge => {
                "n = 3: the nontrivial equilibrium merges with the origin"
            }
            RegimeBoundary::NodeSpiralTransition => {
                "n = (11+8*sqrt(2))/7: the eigenvalues at the nontrivial equilibrium turn complex"
            }
            RegimeBoundary::MarginalDamping => {
                "n = 5: the damping coefficient (n-5)/(n-1) vanishes"
            }
        }
    }
}

/// The boundary the index sits on, within [`BOUNDARY_TOL`], if any.
pub fn boundary_at(n: f64) -> Option<RegimeBoundary> {
    for boundary in [
        RegimeBoundary::EquilibriaMerge,
        RegimeBoundary::NodeSpiralTransition,
        RegimeBoundary::MarginalDamping,
    ] {
        if (n - boundary.value()).abs() <= BOUNDARY_TOL {
            return Some(boundary);
        }
    }
    None
}

/// The four open index ranges with uniform qualitative behavior.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `1 < n < 3`.
    LowIndex,
    /// `3 < n < (11+8*sqrt(2))/7`.
    NodalSinkWindow,
    /// `(11+8*sqrt(2))/7 < n < 5`.
    SpiralSinkWindow,
    /// `5 < n`.
    HighIndex,
}

impl Regime {
    /// All regimes in increasing index order.
    pub fn all() -> [Regime; 4] {
        [
            Regime::LowIndex,
            Regime::NodalSinkWindow,
            Regime::SpiralSinkWindow,
            Regime::HighIndex,
        ]
    }

    /// The regime containing `n`, or `None` when `n <= 1` or `n` sits on
    /// a boundary.
    pub fn of(n: f64) -> Option<Regime> {
        if !n.is_finite() || n <= 1.0 || boundary_at(n).is_some() {
            return None;
        }
        Some(if n < 3.0 {
            Regime::LowIndex
        } else if n < critical_index_nstar() {
            Regime::NodalSinkWindow
        } else if n < 5.0 {
            Regime::SpiralSinkWindow
        } else {
            Regime::HighIndex
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            Regime::LowIndex => "1 < n < 3",
            Regime::NodalSinkWindow => "3 < n < (11+8*sqrt(2))/7",
            Regime::SpiralSinkWindow => "(11+8*sqrt(2))/7 < n < 5",
            Regime::HighIndex => "5 < n",
        }
    }

    /// Open interval bounds; the last regime is unbounded above.
    pub fn bounds(self) -> (f64, f64) {
        match self {
            Regime::LowIndex => (1.0, 3.0),
            Regime::NodalSinkWindow => (3.0, critical_index_nstar()),
            Regime::SpiralSinkWindow => (critical_index_nstar(), 5.0),
            Regime::HighIndex => (5.0, f64::INFINITY),
        }
    }

    /// The representative index used by the default summary table.
    pub fn default_sample(self) -> f64 {
        match self {
            Regime::LowIndex => 2.0,
            Regime::NodalSinkWindow => 3.1,
            Regime::SpiralSinkWindow => 3.5,
            Regime::HighIndex => 6.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nstar_matches_decimal_expansion() {
        assert!((critical_index_nstar() - 3.187_672_642_712_108_7).abs() < 1e-12);
    }

    #[test]
    fn nstar_is_root_of_discriminant_polynomial() {
        let n = critical_index_nstar();
        assert!((7.0 * n * n - 22.0 * n - 1.0).abs() < 1e-12);
    }

    #[test]
    fn regime_boundaries_strictly_ordered() {
        let n = critical_index_nstar();
        assert!(3.0 < n && n < 5.0);
    }

    #[test]
    fn config_rejects_out_of_range_inputs() {
        assert!(PolytropeConfig::new(1.0, 1.0).is_err());
        assert!(PolytropeConfig::new(0.5, 1.0).is_err());
        assert!(PolytropeConfig::new(f64::NAN, 1.0).is_err());
        assert!(PolytropeConfig::new(2.0, 0.0).is_err());
        assert!(PolytropeConfig::new(2.0, -1.0).is_err());
        assert!(PolytropeConfig::new(2.0, f64::INFINITY).is_err());
        assert!(PolytropeConfig::new(1.0 + 1e-12, 1.0).is_ok());
    }

    #[test]
    fn boundary_detection_uses_tolerance_window() {
        assert_eq!(boundary_at(3.0), Some(RegimeBoundary::EquilibriaMerge));
        assert_eq!(
            boundary_at(3.0 + 0.5 * BOUNDARY_TOL),
            Some(RegimeBoundary::EquilibriaMerge)
        );
        assert_eq!(boundary_at(3.0 + 10.0 * BOUNDARY_TOL), None);
        assert_eq!(
            boundary_at(critical_index_nstar()),
            Some(RegimeBoundary::NodeSpiralTransition)
        );
        assert_eq!(boundary_at(5.0), Some(RegimeBoundary::MarginalDamping));
        assert_eq!(boundary_at(2.0), None);
    }

    #[test]
    fn regimes_cover_the_open_ranges() {
        assert_eq!(Regime::of(2.0), Some(Regime::LowIndex));
        assert_eq!(Regime::of(3.1), Some(Regime::NodalSinkWindow));
        assert_eq!(Regime::of(3.5), Some(Regime::SpiralSinkWindow));
        assert_eq!(Regime::of(6.0), Some(Regime::HighIndex));
        assert_eq!(Regime::of(3.0), None);
        assert_eq!(Regime::of(1.0), None);
        assert_eq!(Regime::of(0.5), None);
        assert_eq!(Regime::of(f64::NAN), None);
    }

    #[test]
    fn default_samples_sit_inside_their_regimes() {
        for regime in Regime::all() {
            let sample = regime.default_sample();
            let (lo, hi) = regime.bounds();
            assert!(sample - lo > 0.05 && hi - sample > 0.05);
            assert_eq!(Regime::of(sample), Some(regime));
        }
    }

    #[test]
    fn verdict_words_collapse_for_the_table() {
        assert_eq!(StabilityVerdict::Stable.table_word(), "stable");
        assert_eq!(StabilityVerdict::AsymptoticallyStable.table_word(), "stable");
        assert_eq!(StabilityVerdict::Unstable.table_word(), "unstable");
        assert_eq!(StabilityVerdict::Inconclusive.table_word(), "inconclusive");
    }
}
