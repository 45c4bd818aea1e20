//! The fast-step expansion replaces each envelope by a plain damped cosine.
//! Its error falls off as the square of the step time, so raising gamma by
//! ten shrinks the worst-case gap by about a hundred.

use atomlaser::analytic::{squeezing_exact, squeezing_large_gamma};
use atomlaser::params::{Gamma, ModelParams};

fn worst_gap(gamma: f64) -> (f64, bool) {
    let p = ModelParams::zero_phase(0.1, std::f64::consts::PI, Gamma::Finite(gamma), 0.3).unwrap();
    let mut worst = 0.0f64;
    let mut warned = false;
    for i in 0..=400 {
        let t = i as f64 * 0.025;
        let exact = squeezing_exact(&p, t);
        let approx = squeezing_large_gamma(&p, t).unwrap();
        warned |= approx.domain_warning;
        let a = approx.coeffs;
        for (x, y) in [
            (exact.s1_a, a.s1_a),
            (exact.s2_a, a.s2_a),
            (exact.s1_b, a.s1_b),
            (exact.s2_b, a.s2_b),
        ] {
            worst = worst.max((x - y).abs());
        }
    }
    (worst, warned)
}

fn main() {
    println!("worst |exact - fast-step| over t in [0, 10], all four S coefficients:");
    let mut previous: Option<f64> = None;
    for gamma in [1e3, 1e4, 1e5, 1e6] {
        let (worst, warned) = worst_gap(gamma);
        let ratio = previous.map(|p| p / worst);
        previous = Some(worst);
        println!(
            "  gamma={:<8} worst={:.3e}{}{}",
            gamma,
            worst,
            match ratio {
                Some(r) => format!("  improvement x{:.0}", r),
                None => String::new(),
            },
            if warned { "  (domain warning)" } else { "" }
        );
    }

    // The expansion is refused outright in the unitary limit: there is no
    // step time to expand in.
    let p = ModelParams::zero_phase(0.1, 1.0, Gamma::UnitaryLimit, 0.3).unwrap();
    match squeezing_large_gamma(&p, 1.0) {
        Err(e) => println!("\nunitary limit -> {}", e),
        Ok(_) => unreachable!(),
    }
}
