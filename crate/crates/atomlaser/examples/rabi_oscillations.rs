//! Occupation exchange between the modes and its decay under the step
//! process: number expectation and Mandel Q for the strongly squeezed pump,
//! with and without decoherence.

use atomlaser::analytic::{mandel_q, mean_numbers};
use atomlaser::params::{Gamma, ModelParams};

fn fmt_q(q: Option<f64>) -> String {
    match q {
        Some(v) => format!("{:+.4}", v),
        None => "undef".to_string(),
    }
}

fn main() {
    let unitary = ModelParams::zero_phase(0.0, 1.0, Gamma::UnitaryLimit, 2.0).unwrap();
    let stepped = ModelParams::zero_phase(0.0, 1.0, Gamma::Finite(100.0), 2.0).unwrap();

    println!("omega_prime=1, r=2: occupation swaps at frequency 2*omega_prime");
    println!(
        "{:>6} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "t", "n_a(inf)", "n_a(100)", "n_b(100)", "Q_a(inf)", "Q_a(100)", "Q_b(100)"
    );
    for i in 0..=16 {
        let t = i as f64 * 0.625;
        let (na_u, _) = mean_numbers(&unitary, t);
        let (na_s, nb_s) = mean_numbers(&stepped, t);
        let (qa_u, _) = mandel_q(&unitary, t);
        let (qa_s, qb_s) = mandel_q(&stepped, t);
        println!(
            "{:>6.3} {:>10.4} {:>10.4} {:>10.4} {:>10} {:>10} {:>10}",
            t,
            na_u,
            na_s,
            nb_s,
            fmt_q(qa_u),
            fmt_q(qa_s),
            fmt_q(qb_s)
        );
    }

    // With steps the exchange envelope dies at rate 2*gamma*sin^2(W'/gamma)
    // and both occupations converge to half the pump excitation.
    let sh2 = 2.0f64.sinh().powi(2);
    let (na_inf, nb_inf) = mean_numbers(&stepped, 1e4);
    println!(
        "\nlate time (t=1e4): n_a={:.6} n_b={:.6} vs sinh^2(r)/2={:.6}",
        na_inf,
        nb_inf,
        0.5 * sh2
    );
}
