//! Two-mode dynamics of an atom-laser output coupler under piecewise-unitary
//! (Poisson step) evolution.
//!
//! Mode `a` holds a Bose condensate released by a classical pump into mode
//! `b` at collective rate `omega_prime`; both modes share the frequency
//! `omega`. Time evolution proceeds in whole unitary steps of duration
//! `1/gamma`, Poisson many per interval, which damps every oscillating term
//! by a frequency-dependent envelope while leaving stationary terms alone.
//! The crate computes occupation numbers, number variances, Mandel Q, and
//! quadrature squeezing for both modes along three independent routes:
//!
//! * [`analytic`]: closed forms, valid for any squeeze magnitude.
//! * [`heisenberg`]: brute-force Poisson sum over step counts with Wick
//!   moments per branch (an oracle for the closed forms).
//! * [`fock`]: truncated two-mode Fock-space density matrix evolved by the
//!   exact step map (a second, independent oracle).
//!
//! On top of the physics routes sit the reproduction surfaces: [`presets`]
//! (the five standard curve sets), [`verify`] (closed forms against both
//! oracles), [`scenario`] (laboratory-scale timescales), [`sensitivity`]
//! (coupling-offset scans), and CSV/SVG emission in [`csvout`] and [`plot`].
//!
//! See the `examples/` directory for runnable entry points, or the `atomlaser`
//! binary for the same surfaces behind a command line.

pub mod analytic;
pub mod csvout;
pub mod error;
pub mod fock;
pub mod heisenberg;
pub mod params;
pub mod plot;
pub mod poisson;
pub mod presets;
pub mod scenario;
pub mod sensitivity;
pub mod verify;

pub use analytic::ObservablePoint;
pub use error::{Error, Result};
pub use params::{Gamma, ModelParams, TimeGrid};
