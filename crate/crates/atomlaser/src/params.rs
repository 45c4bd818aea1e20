//! Model parameters, initial-state moments, the per-frequency decoherence
//! envelope, and time grids.
//!
//! The model: two bosonic modes (`a` = trapped atoms, `b` = out-coupled
//! field) exchange quanta at collective rate `omega_prime` while both
//! oscillate at `omega`. Evolution proceeds by whole unitary steps of
//! duration `1/gamma`, with the number of steps in a time `t` Poisson
//! distributed with mean `gamma * t`. Finite `gamma` damps oscillating
//! terms; `gamma -> inf` recovers ordinary unitary dynamics.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Step rate of the piecewise-unitary evolution.
///
/// The infinite-rate (ordinary unitary) case is its own variant so that it
/// is exact rather than approximated by a large float.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gamma {
    Finite(f64),
    UnitaryLimit,
}

impl Gamma {
    /// Rate as a float, or `None` in the unitary limit.
    pub fn rate(self) -> Option<f64> {
        match self {
            Gamma::Finite(g) => Some(g),
            Gamma::UnitaryLimit => None,
        }
    }

    /// Rate as a float, or `UnitaryLimitUnsupported` for step-count sums.
    pub fn finite_rate(self) -> Result<f64> {
        self.rate().ok_or(Error::UnitaryLimitUnsupported)
    }

    fn validate(self) -> Result<Self> {
        match self {
            Gamma::Finite(g) if g > 0.0 && g.is_finite() => Ok(self),
            Gamma::Finite(g) => Err(Error::NonPositiveGamma(g)),
            Gamma::UnitaryLimit => Ok(self),
        }
    }
}

/// Reduce a phase to the canonical interval `(-pi, pi]`.
///
/// Values already in the interval are returned bit-exactly; out-of-range
/// values may pick up one rounding at the wrap.
pub fn reduce_phase(x: f64) -> f64 {
    if x > -PI && x <= PI {
        return x;
    }
    let y = x.rem_euclid(TAU);
    if y > PI {
        y - TAU
    } else {
        y
    }
}

/// Validated parameter set for one run.
///
/// * `omega`: common oscillation frequency of both modes (rad per time unit).
/// * `omega_prime`: collective exchange rate, pump amplitude times single-atom
///   coupling.
/// * `gamma`: unitary step rate.
/// * `r`, `phi`: magnitude and phase of the initial squeezed vacuum in mode
///   `a` (`r = 2 |xi|` for squeeze operator argument `xi`).
/// * `theta`: pump phase entering the exchange term.
///
/// Phases are stored reduced to `(-pi, pi]`.
#[derive(Debug, Clone, Copy)]
pub struct ModelParams {
    pub omega: f64,
    pub omega_prime: f64,
    pub gamma: Gamma,
    pub r: f64,
    pub phi: f64,
    pub theta: f64,
}

impl ModelParams {
    pub fn new(
        omega: f64,
        omega_prime: f64,
        gamma: Gamma,
        r: f64,
        phi: f64,
        theta: f64,
    ) -> Result<Self> {
        if !(omega.is_finite() && omega >= 0.0) {
            return Err(Error::NegativeFrequency {
                name: "omega",
                value: omega,
            });
        }
        if !(omega_prime.is_finite() && omega_prime >= 0.0) {
            return Err(Error::NegativeFrequency {
                name: "omega_prime",
                value: omega_prime,
            });
        }
        gamma.validate()?;
        if !(r.is_finite() && r >= 0.0) {
            return Err(Error::NegativeSqueeze(r));
        }
        if !phi.is_finite() {
            return Err(Error::NonFiniteInput {
                name: "phi",
                value: phi,
            });
        }
        if !theta.is_finite() {
            return Err(Error::NonFiniteInput {
                name: "theta",
                value: theta,
            });
        }
        Ok(ModelParams {
            omega,
            omega_prime,
            gamma,
            r,
            phi: reduce_phase(phi),
            theta: reduce_phase(theta),
        })
    }

    /// Zero-phase convenience constructor (`phi = theta = 0`).
    pub fn zero_phase(omega: f64, omega_prime: f64, gamma: Gamma, r: f64) -> Result<Self> {
        Self::new(omega, omega_prime, gamma, r, 0.0, 0.0)
    }
}

/// Second moments of the initial state: squeezed vacuum in mode `a`,
/// vacuum in mode `b`. First moments vanish identically.
#[derive(Debug, Clone, Copy)]
pub struct GaussianMoments {
    /// Mean occupation of mode `a`: `sinh^2 r`.
    pub n_a0: f64,
    /// Quadrature moment of mode `a`: `e^{i phi} sinh r cosh r`.
    pub a2_0: C64,
}

/// Moments of the squeezed vacuum `S(xi)|0>` with `r = 2 |xi|`,
/// `phi = arg xi`.
pub fn squeezed_vacuum_moments(r: f64, phi: f64) -> Result<GaussianMoments> {
    if !(r.is_finite() && r >= 0.0) {
        return Err(Error::NegativeSqueeze(r));
    }
    if !phi.is_finite() {
        return Err(Error::NonFiniteInput {
            name: "phi",
            value: phi,
        });
    }
    let sh = r.sinh();
    let ch = r.cosh();
    Ok(GaussianMoments {
        n_a0: sh * sh,
        a2_0: C64::from_polar(sh * ch, phi),
    })
}

/// Damping factor attached to a term oscillating at frequency `nu` after
/// time `t` under Poisson-step averaging at rate `gamma`.
///
/// Finite rate `g`: `exp(g t (e^{i nu / g} - 1))`. Unitary limit: the bare
/// phase `e^{i nu t}`.
pub fn envelope(nu: f64, gamma: Gamma, t: f64) -> C64 {
    match gamma {
        Gamma::UnitaryLimit => C64::from_polar(1.0, nu * t),
        Gamma::Finite(g) => {
            // log form: g t (e^{ix} - 1) = -2 g t sin^2(x/2) + i g t sin x,
            // exact in the real part where the direct e^{ix} - 1 cancels.
            let x = nu / g;
            let half = (0.5 * x).sin();
            let log_re = -2.0 * g * t * half * half;
            C64::from_polar(log_re.exp(), g * t * x.sin())
        }
    }
}

/// Exponential decay rate of `|envelope(nu, gamma, t)|` in `t`:
/// `2 gamma sin^2(nu / (2 gamma))`, zero in the unitary limit.
pub fn envelope_decay_rate(nu: f64, gamma: Gamma) -> f64 {
    match gamma {
        Gamma::UnitaryLimit => 0.0,
        Gamma::Finite(g) => {
            let half = (0.5 * nu / g).sin();
            2.0 * g * half * half
        }
    }
}

/// Sample spacing for [`TimeGrid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

/// Inclusive time grid with a fixed point count.
#[derive(Debug, Clone, Copy)]
pub struct TimeGrid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl TimeGrid {
    pub fn linear(start: f64, stop: f64, count: usize) -> Result<Self> {
        Self::validated(start, stop, count, Spacing::Linear)
    }

    pub fn log(start: f64, stop: f64, count: usize) -> Result<Self> {
        if start <= 0.0 {
            return Err(Error::InvalidTimeGrid(format!(
                "log spacing needs start > 0, got {start}"
            )));
        }
        Self::validated(start, stop, count, Spacing::Log)
    }

    fn validated(start: f64, stop: f64, count: usize, spacing: Spacing) -> Result<Self> {
        if !start.is_finite() || !stop.is_finite() {
            return Err(Error::InvalidTimeGrid(format!(
                "endpoints must be finite, got [{start}, {stop}]"
            )));
        }
        if stop <= start {
            return Err(Error::InvalidTimeGrid(format!(
                "need stop > start, got [{start}, {stop}]"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidTimeGrid(format!(
                "need count >= 2, got {count}"
            )));
        }
        Ok(TimeGrid {
            start,
            stop,
            count,
            spacing,
        })
    }

    /// Grid points, endpoints exact.
    pub fn points(&self) -> Vec<f64> {
        let n = self.count;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let u = i as f64 / (n - 1) as f64;
            let t = if i == 0 {
                self.start
            } else if i == n - 1 {
                self.stop
            } else {
                match self.spacing {
                    Spacing::Linear => self.start + u * (self.stop - self.start),
                    Spacing::Log => {
                        let (a, b) = (self.start.ln(), self.stop.ln());
                        (a + u * (b - a)).exp()
                    }
                }
            };
            out.push(t);
        }
        out
    }
}
