//! How the step process damps an oscillation of frequency nu: the envelope
//! magnitude, its phase speed, and the unitary limit where damping vanishes.

use atomlaser::params::{envelope, envelope_decay_rate, Gamma};

fn main() {
    let nu = 2.0;
    println!("envelope of a frequency-{} term, |E| and arg E:", nu);
    println!(
        "{:>8} {:>14} {:>14} {:>14} {:>14}",
        "t", "gamma=10", "gamma=100", "gamma=1e4", "unitary"
    );
    for &t in &[0.0, 1.0, 5.0, 10.0, 50.0] {
        let mut cells = Vec::new();
        for gamma in [
            Gamma::Finite(10.0),
            Gamma::Finite(100.0),
            Gamma::Finite(1e4),
            Gamma::UnitaryLimit,
        ] {
            let e = envelope(nu, gamma, t);
            cells.push(format!("{:.4}@{:+.2}", e.norm(), e.arg()));
        }
        println!(
            "{:>8} {:>14} {:>14} {:>14} {:>14}",
            t, cells[0], cells[1], cells[2], cells[3]
        );
    }

    println!("\nasymptotic decay rate 2*gamma*sin^2(nu/(2*gamma)) vs nu^2/(2*gamma):");
    for g in [10.0, 100.0, 1e4] {
        let exact = envelope_decay_rate(nu, Gamma::Finite(g));
        let approx = nu * nu / (2.0 * g);
        println!(
            "  gamma={:<8} rate={:.6e}  small-step approx={:.6e}  rel err={:.2e}",
            g,
            exact,
            approx,
            (exact - approx).abs() / exact
        );
    }

    // A step rate commensurate with the frequency revives the term exactly:
    // every step advances the phase by a whole turn.
    let g = nu / (2.0 * std::f64::consts::PI);
    let e = envelope(nu, Gamma::Finite(g), 7.3);
    println!(
        "\ncommensurate step rate gamma = nu/(2 pi): |E(t=7.3)| = {:.12} (no damping)",
        e.norm()
    );
}
