//! The step-count window behind both oracles: how many Poisson terms a given
//! mean needs before the excluded mass drops under the 1e-14 target.

use atomlaser::poisson::{PoissonTruncation, DEFAULT_K_CAP};

fn main() {
    println!(
        "{:>10} {:>8} {:>8} {:>7} {:>12} {:>12}",
        "mean", "k_lo", "k_hi", "count", "tail mass", "peak weight"
    );
    for mean in [0.5, 5.0, 50.0, 500.0, 5e3, 5e4, 5e5] {
        let w = PoissonTruncation::with_defaults(mean).unwrap();
        let peak = w.weights().iter().cloned().fold(0.0f64, f64::max);
        println!(
            "{:>10} {:>8} {:>8} {:>7} {:>12.2e} {:>12.4e}",
            mean,
            w.k_lo,
            w.k_hi,
            w.weights().len(),
            w.tail_mass,
            peak
        );
    }

    // The window width grows like sqrt(mean), so the term count stays tame
    // even for enormous step counts; the hard cap catches the rest.
    println!("\nhard cap on the highest step count: {}", DEFAULT_K_CAP);
    match PoissonTruncation::for_mean(1e14, 1e-14, DEFAULT_K_CAP) {
        Err(e) => println!("mean=1e14 -> {}", e),
        Ok(_) => unreachable!("a 1e14 mean cannot fit under the cap"),
    }

    let w = PoissonTruncation::with_defaults(1000.0).unwrap();
    let sum: f64 = w.weights().iter().sum();
    println!(
        "\nmean=1000: plain sum of weights = {:.16} (complement is the tail mass)",
        sum
    );
}
