//! Embedded Dormand-Prince 5(4) integrator for planar systems, with
//! proportional step control and first-same-as-last stage reuse.
//!
//! The right-hand side reports points outside its domain by returning
//! `None`; the stepper reacts by halving the trial step, which lets
//! callers walk up to a domain boundary (a vanishing-density surface,
//! the `w = 0` line for fractional indices) without ever evaluating the
//! field beyond it.

/// Tolerances and step-control limits for one integration.
#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub rtol: f64,
    pub atol: f64,
    /// Upper bound on the step size, when finite behavior matters more
    /// than speed.
    pub max_step: Option<f64>,
    /// Disables error control and forces every accepted step to this
    /// size (used by convergence-order checks).
    pub fixed_step: Option<f64>,
    pub max_steps: usize,
}

impl Options {
    /// Equal absolute and relative tolerance, everything else default.
    pub fn with_tolerance(tol: f64) -> Self {
        Options {
            rtol: tol,
            atol: tol,
            max_step: None,
            fixed_step: None,
            max_steps: 1_000_000,
        }
    }
}

/// Why an integration could not continue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Halt {
    /// The controller pushed the step below the representable floor.
    StepSizeUnderflow { t: f64 },
    /// Repeated halving kept hitting points outside the field's domain.
    OutOfDomain { t: f64 },
    MaxSteps { t: f64 },
}

/// Outcome of one accepted step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Accepted,
    ReachedTarget,
}

const SAFETY: f64 = 0.9;
const SHRINK_LIMIT: f64 = 0.2;
const GROW_LIMIT: f64 = 5.0;
const MAX_DOMAIN_HALVINGS: u32 = 90;

// Dormand-Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
const A2: [f64; 1] = [0.2];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0];
const A6: [f64; 5] = [
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
];
const B: [f64; 6] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
];
// Difference between the 5th- and embedded 4th-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

fn combine(y: &[f64; 2], h: f64, stages: &[(&[f64; 2], f64)]) -> [f64; 2] {
    let mut out = *y;
    for (k, a) in stages {
        out[0] += h * a * k[0];
        out[1] += h * a * k[1];
    }
    out
}

/// Adaptive stepper over `dy/dt = f(t, y)`. The stepper itself holds no
/// closure; the field is passed to every call so snapshots of the state
/// (`Stepper` is `Copy`) can be replayed cheaply during event location.
#[derive(Debug, Clone, Copy)]
pub struct Stepper {
    t: f64,
    y: [f64; 2],
    h: f64,
    /// f(t, y); the last stage of an accepted step equals the first of
    /// the next.
    k1: [f64; 2],
    accepted: usize,
}

impl Stepper {
    /// Evaluates the field once at the initial point; `None` there is an
    /// immediate domain halt.
    pub fn new<F>(f: &mut F, t0: f64, y0: [f64; 2], opts: &Options) -> Result<Self, Halt>
    where
        F: FnMut(f64, &[f64; 2]) -> Option<[f64; 2]>,
    {
        let k1 = f(t0, &y0).ok_or(Halt::OutOfDomain { t: t0 })?;
        let h = initial_step(&y0, &k1, opts);
        Ok(Stepper { t: t0, y: y0, h, k1, accepted: 0 })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn y(&self) -> [f64; 2] {
        self.y
    }

    pub fn accepted_steps(&self) -> usize {
        self.accepted
    }

    /// Takes one accepted step toward `target > t`, retrying internally
    /// on error-test rejections and domain failures. The step is clamped
    /// so the state never moves past `target`.
    pub fn step_toward<F>(&mut self, f: &mut F, target: f64, opts: &Options) -> Result<Step, Halt>
    where
        F: FnMut(f64, &[f64; 2]) -> Option<[f64; 2]>,
    {
        if self.t >= target {
            return Ok(Step::ReachedTarget);
        }
        if self.accepted >= opts.max_steps {
            return Err(Halt::MaxSteps { t: self.t });
        }
        let floor = 1e-14 * self.t.abs().max(1.0);
        let mut proposal = match opts.fixed_step {
            Some(h) => h,
            None => self.h,
        };
        if let Some(max_step) = opts.max_step {
            proposal = proposal.min(max_step);
        }
        let mut domain_halvings = 0u32;
        loop {
            let span = target - self.t;
            let h = proposal.min(span);
            let lands_on_target = h >= span;
            if h < floor && !lands_on_target {
                return Err(Halt::StepSizeUnderflow { t: self.t });
            }

            let trial = self.try_stages(f, h);
            let (y5, k7, err) = match trial {
                Some(result) => result,
                None => {
                    domain_halvings += 1;
                    if domain_halvings > MAX_DOMAIN_HALVINGS {
                        return Err(Halt::OutOfDomain { t: self.t });
                    }
                    proposal = 0.5 * h;
                    continue;
                }
            };

            if opts.fixed_step.is_none() {
                let err_norm = error_norm(&self.y, &y5, &err, opts);
                if err_norm > 1.0 {
                    proposal = h * (SAFETY * err_norm.powf(-0.2)).max(0.1);
                    continue;
                }
                let factor = if err_norm == 0.0 {
                    GROW_LIMIT
                } else {
                    (SAFETY * err_norm.powf(-0.2)).clamp(SHRINK_LIMIT, GROW_LIMIT)
                };
                self.h = h * factor;
            }

            self.t = if lands_on_target { target } else { self.t + h };
            self.y = y5;
            self.k1 = k7;
            self.accepted += 1;
            return Ok(if lands_on_target { Step::ReachedTarget } else { Step::Accepted });
        }
    }

    /// Runs the six remaining stages for a trial step of size `h`.
    /// Returns `None` if any stage leaves the field's domain.
    fn try_stages<F>(&self, f: &mut F, h: f64) -> Option<([f64; 2], [f64; 2], [f64; 2])>
    where
        F: FnMut(f64, &[f64; 2]) -> Option<[f64; 2]>,
    {
        let (t, y, k1) = (self.t, &self.y, &self.k1);
        let k2 = f(t + C[1] * h, &combine(y, h, &[(k1, A2[0])]))?;
        let k3 = f(t + C[2] * h, &combine(y, h, &[(k1, A3[0]), (&k2, A3[1])]))?;
        let k4 = f(t + C[3] * h, &combine(y, h, &[(k1, A4[0]), (&k2, A4[1]), (&k3, A4[2])]))?;
        let k5 = f(
            t + C[4] * h,
            &combine(y, h, &[(k1, A5[0]), (&k2, A5[1]), (&k3, A5[2]), (&k4, A5[3])]),
        )?;
        let k6 = f(
            t + C[5] * h,
            &combine(
                y,
                h,
                &[(k1, A6[0]), (&k2, A6[1]), (&k3, A6[2]), (&k4, A6[3]), (&k5, A6[4])],
            ),
        )?;
        let y5 = combine(
            y,
            h,
            &[(k1, B[0]), (&k3, B[2]), (&k4, B[3]), (&k5, B[4]), (&k6, B[5])],
        );
        let k7 = f(t + C[6] * h, &y5)?;
        let err = [
            h * (E[0] * k1[0] + E[2] * k3[0] + E[3] * k4[0] + E[4] * k5[0] + E[5] * k6[0]
                + E[6] * k7[0]),
            h * (E[0] * k1[1] + E[2] * k3[1] + E[3] * k4[1] + E[4] * k5[1] + E[5] * k6[1]
                + E[6] * k7[1]),
        ];
        Some((y5, k7, err))
    }
}

fn error_norm(y_old: &[f64; 2], y_new: &[f64; 2], err: &[f64; 2], opts: &Options) -> f64 {
    let mut acc = 0.0;
    for i in 0..2 {
        let scale = opts.atol + opts.rtol * y_old[i].abs().max(y_new[i].abs());
        let ratio = err[i] / scale;
        acc += ratio * ratio;
    }
    (0.5 * acc).sqrt()
}

fn initial_step(y0: &[f64; 2], f0: &[f64; 2], opts: &Options) -> f64 {
    if let Some(h) = opts.fixed_step {
        return h;
    }
    let mut d0 = 0.0;
    let mut d1 = 0.0;
    for i in 0..2 {
        let scale = opts.atol + opts.rtol * y0[i].abs();
        d0 += (y0[i] / scale).powi(2);
        d1 += (f0[i] / scale).powi(2);
    }
    let (d0, d1) = (d0.sqrt(), d1.sqrt());
    let h = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
    match opts.max_step {
        Some(max_step) => h.min(max_step),
        None => h,
    }
}
