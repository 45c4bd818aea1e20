//! Poisson step-count window: truncation bounds, weights, and compensated
//! summation.
//!
//! Every finite-rate expectation value is a Poisson-weighted sum over the
//! step count `k`. The window keeps `k` in `mean ± m sqrt(mean)` with `m`
//! chosen from an analytic Chernoff bound so the excluded probability is
//! below a target, and the kept weights are normalized so their sum plus
//! the reported tail is 1 to machine precision.

use crate::error::{Error, Result};

/// Default bound on the probability mass excluded by the window.
pub const DEFAULT_TARGET_TAIL: f64 = 1e-14;

/// Default cap on the upper window edge; a larger `k_hi` signals that
/// `gamma * t` is too large for step-count summation.
pub const DEFAULT_K_CAP: u64 = 10_000_000;

/// Neumaier compensated accumulator. Adding terms of wildly different
/// magnitude loses no more than one rounding in the final `value`.
#[derive(Debug, Default, Clone, Copy)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// `ln k!`. Exact product below 171 (the largest factorial in f64 range),
/// Stirling series above; both paths are accurate to ~1e-15 relative.
pub fn ln_factorial(k: u64) -> f64 {
    if k < 2 {
        return 0.0;
    }
    if k <= 170 {
        let mut p = 1.0_f64;
        for j in 2..=k {
            p *= j as f64;
        }
        return p.ln();
    }
    let z = k as f64;
    let z2 = z * z;
    // Stirling series for ln Gamma(z+1); next omitted term is ~1/(1680 z^7).
    (z + 0.5) * z.ln() - z + 0.5 * (2.0 * std::f64::consts::PI).ln() + (1.0 / 12.0) / z
        - (1.0 / 360.0) / (z * z2)
        + (1.0 / 1260.0) / (z * z2 * z2)
}

/// Chernoff bound on the Poisson tail beyond `k`:
/// `P(X >= k) <= exp(k - mean - k ln(k / mean))` for `k > mean`, and the
/// same expression bounds `P(X <= k)` for `k < mean`.
fn chernoff(k: f64, mean: f64) -> f64 {
    (k - mean - k * (k / mean).ln()).exp()
}

/// Step-count window for one value of `mean = gamma * t`, with normalized
/// weights for `k in [k_lo, k_hi]`.
#[derive(Debug, Clone)]
pub struct PoissonTruncation {
    pub mean: f64,
    pub k_lo: u64,
    pub k_hi: u64,
    /// Probability mass outside the window, `1 - sum(weights)`.
    pub tail_mass: f64,
    pub target_tail: f64,
    weights: Vec<f64>,
}

impl PoissonTruncation {
    /// Window with the default tail target and cap.
    pub fn with_defaults(mean: f64) -> Result<Self> {
        Self::for_mean(mean, DEFAULT_TARGET_TAIL, DEFAULT_K_CAP)
    }

    /// Window covering `mean ± m sqrt(mean)` with `m` grown until the
    /// Chernoff bound on each excluded side is at most `target_tail / 2`.
    pub fn for_mean(mean: f64, target_tail: f64, k_cap: u64) -> Result<Self> {
        if !(mean.is_finite() && mean >= 0.0) {
            return Err(Error::NegativeFrequency {
                name: "poisson mean",
                value: mean,
            });
        }
        if !(target_tail > 0.0 && target_tail < 1.0) {
            return Err(Error::NonFiniteInput {
                name: "target_tail",
                value: target_tail,
            });
        }
        if mean == 0.0 {
            return Ok(PoissonTruncation {
                mean,
                k_lo: 0,
                k_hi: 0,
                tail_mass: 0.0,
                target_tail,
                weights: vec![1.0],
            });
        }

        let side = 0.5 * target_tail;
        let sig = mean.sqrt();
        let mut k_hi = 0u64;
        for m in 1..=100_000u64 {
            let k = (mean + m as f64 * sig).ceil();
            if chernoff(k, mean) <= side {
                k_hi = k as u64;
                break;
            }
        }
        if k_hi > k_cap {
            return Err(Error::WindowOverflow { k_hi, cap: k_cap });
        }
        let mut k_lo = 0u64;
        for m in 1..=100_000u64 {
            let k = (mean - m as f64 * sig).floor();
            if k <= 0.0 {
                break;
            }
            if chernoff(k, mean) <= side {
                k_lo = k as u64;
                break;
            }
        }

        // Weight ratios w_k / w_anchor by the exact recurrence
        // w_{k+1} = w_k * mean / (k + 1), anchored at the mode. Normalizing
        // by the total including the out-of-window remainder makes
        // sum(weights) + tail_mass = 1 to machine precision regardless of
        // the absolute scale's accuracy.
        let anchor = (mean.round() as u64).clamp(k_lo, k_hi);
        let n = (k_hi - k_lo + 1) as usize;
        let mut ratios = vec![0.0_f64; n];
        ratios[(anchor - k_lo) as usize] = 1.0;
        for k in anchor..k_hi {
            let i = (k - k_lo) as usize;
            ratios[i + 1] = ratios[i] * mean / (k + 1) as f64;
        }
        for k in (k_lo..anchor).rev() {
            let i = (k - k_lo) as usize;
            ratios[i] = ratios[i + 1] * (k + 1) as f64 / mean;
        }

        let mut in_window = Neumaier::default();
        for &x in &ratios {
            in_window.add(x);
        }
        let r_in = in_window.value();

        let mut out = Neumaier::default();
        let cutoff = r_in * 1e-25;
        let mut term = ratios[n - 1];
        let mut k = k_hi;
        loop {
            term *= mean / (k + 1) as f64;
            k += 1;
            if term < cutoff || k > k_hi + 1_000_000 {
                break;
            }
            out.add(term);
        }
        if k_lo > 0 {
            let mut term = ratios[0];
            let mut k = k_lo;
            while k > 0 {
                term *= k as f64 / mean;
                k -= 1;
                if term < cutoff {
                    break;
                }
                out.add(term);
            }
        }
        let norm = r_in + out.value();

        let mut weights = ratios;
        for w in &mut weights {
            *w /= norm;
        }
        let mut total = Neumaier::default();
        for &w in &weights {
            total.add(w);
        }
        let tail_mass = (1.0 - total.value()).max(0.0);

        Ok(PoissonTruncation {
            mean,
            k_lo,
            k_hi,
            tail_mass,
            target_tail,
            weights,
        })
    }

    /// Normalized weights for `k = k_lo ..= k_hi`.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Iterator over `(k, w_k)` pairs in ascending `k`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        (self.k_lo..=self.k_hi).zip(self.weights.iter().copied())
    }
}
