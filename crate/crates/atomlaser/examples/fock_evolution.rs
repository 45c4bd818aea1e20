//! Drive the truncated Fock-space oracle directly: evolve a squeezed pump
//! through the step channel, inspect the density matrix, and compare its
//! moments with the closed forms.

use atomlaser::analytic::observable_point;
use atomlaser::fock::{
    build_hamiltonian, kraus_evolve, observables_from_density, squeezed_vacuum_fock, state_index,
    TruncatedDensityMatrix,
};
use atomlaser::params::{Gamma, ModelParams};
use atomlaser::poisson::PoissonTruncation;

fn main() {
    let p = ModelParams::zero_phase(0.1, std::f64::consts::PI, Gamma::Finite(100.0), 0.3).unwrap();
    let n_max = 24;
    let h = build_hamiltonian(&p, n_max).unwrap();
    let state = squeezed_vacuum_fock(p.r, p.phi, n_max).unwrap();
    println!(
        "n_max={} (dimension {}), initial truncation budget {:.2e}",
        n_max,
        state.amplitudes.len(),
        state.truncation_budget
    );
    let rho0 = TruncatedDensityMatrix::from_pure(&state);

    for &t in &[0.5, 3.0] {
        let gamma = p.gamma.finite_rate().unwrap();
        let window = PoissonTruncation::with_defaults(gamma * t).unwrap();
        let rho = kraus_evolve(&h, &rho0, &p, t, &window).unwrap();
        let pt = observables_from_density(&rho, t);
        let reference = observable_point(&p, t);
        println!(
            "\nt={} (step window k in [{}, {}]):",
            t, window.k_lo, window.k_hi
        );
        println!(
            "  trace deficit {:.2e}, hermiticity drift {:.2e}, min eigenvalue {:.2e}",
            rho.trace_deficit(),
            rho.hermiticity_drift(),
            rho.min_eigenvalue()
        );
        println!(
            "  n_b: fock {:.12}  closed form {:.12}  |d|={:.2e}",
            pt.n_b,
            reference.n_b,
            (pt.n_b - reference.n_b).abs()
        );
        println!(
            "  S2_b: fock {:.12}  closed form {:.12}  |d|={:.2e}",
            pt.s2_b,
            reference.s2_b,
            (pt.s2_b - reference.s2_b).abs()
        );
        println!("  ground/first populations:");
        for (na, nb) in [(0, 0), (2, 0), (1, 1), (0, 2)] {
            let i = state_index(na, nb);
            println!(
                "    P(n_a={}, n_b={}) = {:.6}",
                na,
                nb,
                rho.entries[(i, i)].re
            );
        }
    }
}
