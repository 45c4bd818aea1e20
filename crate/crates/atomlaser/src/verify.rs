//! Cross-certification of the closed-form observables against the two
//! independent oracles (Heisenberg-picture resummation, truncated Fock-space
//! channel), with per-observable discrepancy accounting and a plain-text
//! report.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::analytic::{observable_point, ObservablePoint};
use crate::error::{Error, Result};
use crate::fock::{
    build_hamiltonian, kraus_evolve, observables_from_density, squeezed_vacuum_fock,
    TruncatedDensityMatrix,
};
use crate::heisenberg::poisson_observables;
use crate::params::{Gamma, ModelParams, TimeGrid};
use crate::poisson::{PoissonTruncation, DEFAULT_K_CAP};

/// Oracles selectable for a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    Heisenberg,
    Fock,
}

impl OracleKind {
    pub fn name(self) -> &'static str {
        match self {
            OracleKind::Heisenberg => "heisenberg",
            OracleKind::Fock => "fock",
        }
    }
}

/// The eight compared observables, in report order.
pub const OBSERVABLE_NAMES: [&str; 8] = [
    "n_a", "n_b", "var_a", "var_b", "s1_a", "s2_a", "s1_b", "s2_b",
];

fn observables8(p: &ObservablePoint) -> [f64; 8] {
    [
        p.n_a, p.n_b, p.var_a, p.var_b, p.s1_a, p.s2_a, p.s1_b, p.s2_b,
    ]
}

/// Knobs for a verification run.
#[derive(Debug, Clone)]
pub struct VerifySettings {
    pub tol_heisenberg: f64,
    pub tol_fock: f64,
    pub n_max: usize,
    pub target_tail: f64,
    /// Fock moments of a truncated squeezed state degrade quickly above this
    /// squeeze parameter; larger r skips the fock path with a warning.
    pub fock_r_limit: f64,
    /// Positivity checks diagonalize the full density matrix, so they run on
    /// every `spot_eigen_stride`-th grid point (plus the last).
    pub spot_eigen_stride: usize,
}

impl Default for VerifySettings {
    fn default() -> Self {
        VerifySettings {
            tol_heisenberg: 1e-10,
            tol_fock: 1e-8,
            n_max: 24,
            target_tail: 1e-14,
            fock_r_limit: 0.5,
            spot_eigen_stride: 7,
        }
    }
}

/// Worst-case discrepancy of one observable over the grid.
#[derive(Debug, Clone, Copy, Default)]
pub struct Discrepancy {
    pub max_abs: f64,
    /// Relative error is recorded only where the reference magnitude exceeds
    /// 1e-6 of its largest value on the grid; tiny references would otherwise
    /// dominate with meaningless ratios.
    pub max_rel: f64,
    pub at_t: f64,
}

/// Density-matrix health over a fock-path run.
#[derive(Debug, Clone, Copy)]
pub struct FockHygiene {
    pub min_trace: f64,
    pub max_trace: f64,
    pub max_hermiticity_drift: f64,
    pub max_excitation_drift: f64,
    pub min_eigenvalue: f64,
    pub eigen_points_checked: usize,
}

/// Outcome of one oracle path.
#[derive(Debug, Clone)]
pub struct PathReport {
    pub oracle: OracleKind,
    pub tolerance: f64,
    pub discrepancies: [Discrepancy; 8],
    pub wall: Duration,
    pub max_tail_mass: f64,
    pub truncation_budget: Option<f64>,
    pub hygiene: Option<FockHygiene>,
    pub skipped: Option<String>,
    pub pass: bool,
}

/// Full verification outcome; `pass` iff every non-skipped path passed.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub params: ModelParams,
    pub grid: TimeGrid,
    pub paths: Vec<PathReport>,
    pub pass: bool,
}

fn window_for(p: &ModelParams, t: f64, target_tail: f64) -> Result<PoissonTruncation> {
    let gamma = p.gamma.finite_rate()?;
    PoissonTruncation::for_mean(gamma * t, target_tail, DEFAULT_K_CAP)
}

fn compare(reference: &[[f64; 8]], candidate: &[[f64; 8]], times: &[f64]) -> [Discrepancy; 8] {
    let mut out = [Discrepancy::default(); 8];
    let mut scale = [0.0f64; 8];
    for row in reference {
        for (s, v) in scale.iter_mut().zip(row) {
            *s = s.max(v.abs());
        }
    }
    for ((r, c), &t) in reference.iter().zip(candidate).zip(times) {
        for i in 0..8 {
            let abs = (r[i] - c[i]).abs();
            if abs > out[i].max_abs {
                out[i].max_abs = abs;
                out[i].at_t = t;
            }
            if r[i].abs() > 1e-6 * scale[i].max(f64::MIN_POSITIVE) {
                out[i].max_rel = out[i].max_rel.max(abs / r[i].abs());
            }
        }
    }
    out
}

fn heisenberg_path(
    p: &ModelParams,
    times: &[f64],
    reference: &[[f64; 8]],
    settings: &VerifySettings,
) -> Result<PathReport> {
    let start = Instant::now();
    let evaluated: Vec<(ObservablePoint, f64)> = times
        .par_iter()
        .map(|&t| {
            let window = window_for(p, t, settings.target_tail)?;
            let tail = window.tail_mass;
            Ok((poisson_observables(p, t, &window)?, tail))
        })
        .collect::<Result<_>>()?;
    let candidate: Vec<[f64; 8]> = evaluated.iter().map(|(pt, _)| observables8(pt)).collect();
    let max_tail = evaluated.iter().fold(0.0f64, |m, (_, t)| m.max(*t));
    let discrepancies = compare(reference, &candidate, times);
    let pass = discrepancies
        .iter()
        .all(|d| d.max_abs <= settings.tol_heisenberg);
    Ok(PathReport {
        oracle: OracleKind::Heisenberg,
        tolerance: settings.tol_heisenberg,
        discrepancies,
        wall: start.elapsed(),
        max_tail_mass: max_tail,
        truncation_budget: None,
        hygiene: None,
        skipped: None,
        pass,
    })
}

struct FockPoint {
    observables: [f64; 8],
    tail: f64,
    trace: f64,
    herm: f64,
    excitation: f64,
    min_eig: Option<f64>,
}

fn fock_path(
    p: &ModelParams,
    times: &[f64],
    reference: &[[f64; 8]],
    settings: &VerifySettings,
) -> Result<PathReport> {
    let start = Instant::now();
    if p.r > settings.fock_r_limit {
        return Ok(PathReport {
            oracle: OracleKind::Fock,
            tolerance: settings.tol_fock,
            discrepancies: [Discrepancy::default(); 8],
            wall: start.elapsed(),
            max_tail_mass: 0.0,
            truncation_budget: None,
            hygiene: None,
            skipped: Some(format!(
                "r={} exceeds the fock-path limit {}; truncated moments at n_max={} \
                 would not be trustworthy",
                p.r, settings.fock_r_limit, settings.n_max
            )),
            pass: true,
        });
    }
    let h = build_hamiltonian(p, settings.n_max)?;
    let state = squeezed_vacuum_fock(p.r, p.phi, settings.n_max)?;
    let rho0 = TruncatedDensityMatrix::from_pure(&state);
    let excitation0 = rho0.total_excitation();
    let stride = settings.spot_eigen_stride.max(1);
    let last = times.len().saturating_sub(1);

    let points: Vec<FockPoint> = times
        .par_iter()
        .enumerate()
        .map(|(i, &t)| {
            let window = window_for(p, t, settings.target_tail)?;
            let tail = window.tail_mass;
            let rho = kraus_evolve(&h, &rho0, p, t, &window)?;
            let pt = observables_from_density(&rho, t);
            let min_eig = if i % stride == 0 || i == last {
                Some(rho.min_eigenvalue())
            } else {
                None
            };
            Ok(FockPoint {
                observables: observables8(&pt),
                tail,
                trace: rho.trace(),
                herm: rho.hermiticity_drift(),
                excitation: rho.total_excitation(),
                min_eig,
            })
        })
        .collect::<Result<_>>()?;

    let candidate: Vec<[f64; 8]> = points.iter().map(|fp| fp.observables).collect();
    let discrepancies = compare(reference, &candidate, times);
    let mut hygiene = FockHygiene {
        min_trace: f64::INFINITY,
        max_trace: f64::NEG_INFINITY,
        max_hermiticity_drift: 0.0,
        max_excitation_drift: 0.0,
        min_eigenvalue: f64::INFINITY,
        eigen_points_checked: 0,
    };
    let mut max_tail = 0.0f64;
    for fp in &points {
        max_tail = max_tail.max(fp.tail);
        hygiene.min_trace = hygiene.min_trace.min(fp.trace);
        hygiene.max_trace = hygiene.max_trace.max(fp.trace);
        hygiene.max_hermiticity_drift = hygiene.max_hermiticity_drift.max(fp.herm);
        hygiene.max_excitation_drift = hygiene
            .max_excitation_drift
            .max((fp.excitation - excitation0).abs());
        if let Some(e) = fp.min_eig {
            hygiene.min_eigenvalue = hygiene.min_eigenvalue.min(e);
            hygiene.eigen_points_checked += 1;
        }
    }
    let pass = discrepancies.iter().all(|d| d.max_abs <= settings.tol_fock);
    Ok(PathReport {
        oracle: OracleKind::Fock,
        tolerance: settings.tol_fock,
        discrepancies,
        wall: start.elapsed(),
        max_tail_mass: max_tail,
        truncation_budget: Some(state.truncation_budget),
        hygiene: Some(hygiene),
        skipped: None,
        pass,
    })
}

/// Evaluate the closed forms on `grid` and certify each requested oracle
/// against them. Oracle paths need a finite step rate.
pub fn run_verify(
    p: &ModelParams,
    grid: &TimeGrid,
    oracles: &[OracleKind],
    settings: &VerifySettings,
) -> Result<VerifyReport> {
    if !oracles.is_empty() && matches!(p.gamma, Gamma::UnitaryLimit) {
        return Err(Error::UnitaryLimitUnsupported);
    }
    let times = grid.points();
    let reference: Vec<[f64; 8]> = times
        .iter()
        .map(|&t| observables8(&observable_point(p, t)))
        .collect();

    let mut paths = Vec::new();
    for &oracle in oracles {
        let report = match oracle {
            OracleKind::Heisenberg => heisenberg_path(p, &times, &reference, settings)?,
            OracleKind::Fock => fock_path(p, &times, &reference, settings)?,
        };
        paths.push(report);
    }
    let pass = paths.iter().all(|p| p.pass);
    Ok(VerifyReport {
        params: *p,
        grid: *grid,
        paths,
        pass,
    })
}

impl VerifyReport {
    /// Plain-text report: one block per path, one line per observable.
    pub fn render(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        let gamma = match self.params.gamma {
            Gamma::UnitaryLimit => "inf".to_string(),
            Gamma::Finite(g) => format!("{}", g),
        };
        let _ = writeln!(
            out,
            "verify: omega={} omega_prime={} gamma={} r={} phi={} theta={}",
            self.params.omega,
            self.params.omega_prime,
            gamma,
            self.params.r,
            self.params.phi,
            self.params.theta
        );
        let _ = writeln!(
            out,
            "grid: {} points, {:?}, [{}, {}]",
            self.grid.count, self.grid.spacing, self.grid.start, self.grid.stop
        );
        for path in &self.paths {
            if let Some(reason) = &path.skipped {
                let _ = writeln!(out, "path {}: WARN skipped: {}", path.oracle.name(), reason);
                continue;
            }
            let _ = writeln!(
                out,
                "path {}: tolerance {:.1e}, wall {:.1} ms, max tail mass {:.2e}",
                path.oracle.name(),
                path.tolerance,
                path.wall.as_secs_f64() * 1e3,
                path.max_tail_mass
            );
            if let Some(b) = path.truncation_budget {
                let _ = writeln!(out, "  initial-state truncation budget {:.2e}", b);
            }
            for (name, d) in OBSERVABLE_NAMES.iter().zip(path.discrepancies.iter()) {
                let _ = writeln!(
                    out,
                    "  {:<5} max|d| {:.3e}  max rel {:.3e}  at t={:.6}",
                    name, d.max_abs, d.max_rel, d.at_t
                );
            }
            if let Some(h) = &path.hygiene {
                let _ = writeln!(
                    out,
                    "  trace in [{:.12}, {:.12}], herm drift <= {:.2e}, excitation drift <= {:.2e}",
                    h.min_trace, h.max_trace, h.max_hermiticity_drift, h.max_excitation_drift
                );
                let _ = writeln!(
                    out,
                    "  min eigenvalue {:.3e} ({} spot-checked points)",
                    h.min_eigenvalue, h.eigen_points_checked
                );
            }
            let _ = writeln!(out, "  {}", if path.pass { "PASS" } else { "FAIL" });
        }
        let _ = writeln!(out, "VERDICT: {}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}
