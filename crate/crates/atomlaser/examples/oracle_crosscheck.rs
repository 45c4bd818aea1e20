//! Certify the closed-form observables against both independent oracles on a
//! fifty-point grid and print the full discrepancy report.

use atomlaser::params::{Gamma, ModelParams, TimeGrid};
use atomlaser::verify::{run_verify, OracleKind, VerifySettings};

fn main() {
    let p = ModelParams::zero_phase(0.1, std::f64::consts::PI, Gamma::Finite(100.0), 0.3).unwrap();
    let grid = TimeGrid::linear(0.0, 10.0, 50).unwrap();
    let report = run_verify(
        &p,
        &grid,
        &[OracleKind::Heisenberg, OracleKind::Fock],
        &VerifySettings::default(),
    )
    .unwrap();
    print!("{}", report.render());

    // The fock path bails out (with the heisenberg path still certifying)
    // once the squeezed state no longer fits the truncated basis.
    let strong = ModelParams::zero_phase(0.0, 1.0, Gamma::Finite(100.0), 2.0).unwrap();
    let report = run_verify(
        &strong,
        &grid,
        &[OracleKind::Heisenberg, OracleKind::Fock],
        &VerifySettings::default(),
    )
    .unwrap();
    print!("\n{}", report.render());
}
