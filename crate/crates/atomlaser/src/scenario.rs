//! Output-coupling scenario at laboratory parameters.
//!
//! Internal unit system: angular frequencies in rad/ms, step rate in 1/ms.
//! Trap frequency 300 rad/ms, collective coupling sqrt(1e6)*60 = 6e4 rad/ms
//! (a condensate of 1e6 atoms at single-atom coupling 60 rad/ms), step rate
//! 1e8 /ms, squeeze parameter r=1. The CSV time column is in seconds.
//!
//! Because the quoted laboratory values could be read either as angular
//! frequencies or as cycle frequencies, the summary reports every timescale
//! under both readings; the step rate is an event rate and is the same in
//! both.

use std::f64::consts::TAU;

use crate::analytic::observable_point;
use crate::csvout::Table;
use crate::error::Result;
use crate::params::{envelope_decay_rate, Gamma, ModelParams, TimeGrid};

pub const SCENARIO_OMEGA_RAD_PER_MS: f64 = 300.0;
pub const SCENARIO_OMEGA_PRIME_RAD_PER_MS: f64 = 6.0e4;
pub const SCENARIO_GAMMA_PER_MS: f64 = 1.0e8;
pub const SCENARIO_R: f64 = 1.0;
/// An envelope counts as dead once its magnitude drops below this.
pub const ENVELOPE_THRESHOLD: f64 = 1e-3;
/// Squeezing-destruction time this scenario is usually credited with. None of
/// the envelope rates computed here yields it under either unit reading, so
/// the summary flags the mismatch instead of tuning units until it fits.
pub const NOMINAL_DESTRUCTION_TIME_S: f64 = 0.15;

const MS_PER_S: f64 = 1e3;

/// Scenario parameters in the internal rad/ms system (angular reading).
pub fn scenario_params() -> Result<ModelParams> {
    ModelParams::zero_phase(
        SCENARIO_OMEGA_RAD_PER_MS,
        SCENARIO_OMEGA_PRIME_RAD_PER_MS,
        Gamma::Finite(SCENARIO_GAMMA_PER_MS),
        SCENARIO_R,
    )
}

/// Default grid: 2000 log-spaced points from 0.1 us to 1 s (in seconds).
pub fn scenario_grid() -> Result<TimeGrid> {
    TimeGrid::log(1e-7, 1.0, 2000)
}

/// `t` (seconds), untrapped-mode occupation `N_b`, quadrature coefficient
/// `S2_b`, evaluated from the closed forms.
pub fn scenario_table(grid: &TimeGrid) -> Result<Table> {
    let p = scenario_params()?;
    let mut table = Table::new(vec!["t".into(), "N_b".into(), "S2_b".into()]);
    for &t_s in &grid.points() {
        let pt = observable_point(&p, t_s * MS_PER_S);
        table.push_row(vec![Some(t_s), Some(pt.n_b), Some(pt.s2_b)]);
    }
    Ok(table)
}

/// Envelope timescales under one unit reading.
#[derive(Debug, Clone, Copy)]
pub struct ReadingTimescales {
    /// Decay rate of the occupation-exchange envelope |E(2*omega_prime, .)|, per second.
    pub rabi_rate_per_s: f64,
    /// Time at which that envelope crosses `ENVELOPE_THRESHOLD`, seconds.
    pub freeze_time_s: f64,
    /// Decay rate of the slowest squeezing-term envelope |E(2*omega, .)|, per second.
    pub slowest_squeezing_rate_per_s: f64,
    /// Time at which the last squeezing envelope crosses the threshold, seconds.
    pub quiet_time_s: f64,
}

fn timescales(omega: f64, omega_prime: f64) -> ReadingTimescales {
    let gamma = Gamma::Finite(SCENARIO_GAMMA_PER_MS);
    let ln_gain = -ENVELOPE_THRESHOLD.ln();
    let rabi_rate = envelope_decay_rate(2.0 * omega_prime, gamma) * MS_PER_S;
    // The squeezing terms carry E(-2w), E(2(W'-w)) and E(-2(W'+w)); with
    // W' >> w the first is by far the slowest.
    let squeezing_rates = [
        envelope_decay_rate(-2.0 * omega, gamma),
        envelope_decay_rate(2.0 * (omega_prime - omega), gamma),
        envelope_decay_rate(-2.0 * (omega_prime + omega), gamma),
    ];
    let slowest = squeezing_rates.iter().fold(f64::INFINITY, |m, &r| m.min(r)) * MS_PER_S;
    ReadingTimescales {
        rabi_rate_per_s: rabi_rate,
        freeze_time_s: ln_gain / rabi_rate,
        slowest_squeezing_rate_per_s: slowest,
        quiet_time_s: ln_gain / slowest,
    }
}

/// Envelope timescales under both unit readings, plus the reproduction flag
/// for the nominal destruction time.
#[derive(Debug, Clone, Copy)]
pub struct ScenarioSummary {
    pub angular: ReadingTimescales,
    pub ordinary: ReadingTimescales,
    pub nominal_destruction_time_s: f64,
    /// True iff some computed quiet time matches the nominal destruction time
    /// within a factor of two. Reported, never fitted.
    pub destruction_time_reproduced: bool,
}

pub fn scenario_summary() -> ScenarioSummary {
    let angular = timescales(SCENARIO_OMEGA_RAD_PER_MS, SCENARIO_OMEGA_PRIME_RAD_PER_MS);
    // Ordinary reading: quoted values are cycles per second, so the angular
    // frequencies gain a factor 2*pi; the step rate is already an event rate.
    let ordinary = timescales(
        TAU * SCENARIO_OMEGA_RAD_PER_MS,
        TAU * SCENARIO_OMEGA_PRIME_RAD_PER_MS,
    );
    // A two-significant-figure nominal value counts as reproduced only if a
    // computed quiet time lands within 20% of it; the closest candidate here
    // (ordinary reading, 0.097 s) misses by ~35%.
    let reproduced = [angular.quiet_time_s, ordinary.quiet_time_s]
        .iter()
        .any(|&t| {
            let ratio = t / NOMINAL_DESTRUCTION_TIME_S;
            (0.8..=1.25).contains(&ratio)
        });
    ScenarioSummary {
        angular,
        ordinary,
        nominal_destruction_time_s: NOMINAL_DESTRUCTION_TIME_S,
        destruction_time_reproduced: reproduced,
    }
}

impl ScenarioSummary {
    pub fn render(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        let _ = writeln!(out, "output-coupling scenario, internal units rad/ms:");
        let _ = writeln!(
            out,
            "  omega={} omega_prime={} (sqrt(1e6)*60) gamma={:e} r={}",
            SCENARIO_OMEGA_RAD_PER_MS,
            SCENARIO_OMEGA_PRIME_RAD_PER_MS,
            SCENARIO_GAMMA_PER_MS,
            SCENARIO_R
        );
        let _ = writeln!(
            out,
            "envelope threshold {:e}; all times in seconds",
            ENVELOPE_THRESHOLD
        );
        for (label, ts) in [("angular", &self.angular), ("ordinary", &self.ordinary)] {
            let _ = writeln!(out, "{} reading:", label);
            let _ = writeln!(
                out,
                "  occupation-exchange envelope: rate {:.6e} /s, frozen at t = {:.6e} s",
                ts.rabi_rate_per_s, ts.freeze_time_s
            );
            let _ = writeln!(
                out,
                "  slowest squeezing envelope:   rate {:.6e} /s, quiet at t = {:.6e} s",
                ts.slowest_squeezing_rate_per_s, ts.quiet_time_s
            );
        }
        if self.destruction_time_reproduced {
            let _ = writeln!(
                out,
                "nominal destruction time {} s: consistent with a computed quiet time",
                self.nominal_destruction_time_s
            );
        } else {
            let _ = writeln!(
                out,
                "nominal destruction time {} s: NOT reproduced by any envelope rate \
                 (computed quiet times: {:.3e} s angular, {:.3e} s ordinary)",
                self.nominal_destruction_time_s,
                self.angular.quiet_time_s,
                self.ordinary.quiet_time_s
            );
        }
        out
    }
}
