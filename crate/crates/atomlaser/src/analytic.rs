//! Closed-form observables: occupation numbers, number variances, Mandel Q,
//! quadrature squeezing, a large-rate approximation, and stationary limits.
//!
//! Every formula here is a resummation of the Poisson step average into
//! products of hyperbolic factors of `r` and envelope evaluations at the
//! handful of frequencies the dynamics contains (`2 omega_prime`,
//! `4 omega_prime`, `2 omega`, `2 (omega_prime ± omega)`). The [`crate::heisenberg`]
//! and [`crate::fock`] modules re-derive the same quantities without these
//! resummations and serve as oracles for them.

use num_complex::Complex64 as C64;

use crate::error::Result;
use crate::params::{envelope, ModelParams};

/// Mandel Q is reported only where the mean occupation exceeds
/// `MANDEL_Q_FLOOR_SCALE * sinh^2 r`; below that the 0/0 ratio has no
/// direction-independent limit.
pub const MANDEL_Q_FLOOR_SCALE: f64 = 1e-12;

/// Relative tolerance for detecting the degenerate `omega_prime = omega`
/// case in [`stationary_values`].
pub const DEGENERACY_REL_TOL: f64 = 1e-12;

/// Quadrature squeezing coefficients for both modes. Quadrature `1` is the
/// cosine (position-like) quadrature, `2` the sine (momentum-like) one; a
/// negative value means fluctuations below the vacuum level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezingCoefficients {
    pub s1_a: f64,
    pub s2_a: f64,
    pub s1_b: f64,
    pub s2_b: f64,
}

/// Result of the large-rate approximation. `domain_warning` is advisory:
/// the values are computed either way, but with `max(omega, omega_prime)`
/// above a tenth of the step rate the quadratic-decay substitution is no
/// longer trustworthy.
#[derive(Debug, Clone, Copy)]
pub struct LargeGammaSqueezing {
    pub coeffs: SqueezingCoefficients,
    pub domain_warning: bool,
}

/// Long-time limits of the squeezing coefficients.
#[derive(Debug, Clone, Copy)]
pub struct StationaryValues {
    /// Limit of all four coefficients when `omega_prime != omega`: `sinh^2 r`.
    pub generic: f64,
    /// `sinh^2 r + sinh r cosh r / 2`, populated only in the degenerate case.
    pub special_plus: Option<f64>,
    /// `sinh^2 r - sinh r cosh r / 2`, populated only in the degenerate case.
    pub special_minus: Option<f64>,
    /// True when the degenerate stationary state stays squeezed:
    /// `omega_prime = omega` and `0 < tanh r < 1/2`.
    pub squeezed_at_infinity: bool,
}

/// All observables at one time. `q_a`/`q_b` are `None` where the mean
/// occupation is below the Mandel-Q floor.
#[derive(Debug, Clone, Copy)]
pub struct ObservablePoint {
    pub t: f64,
    pub n_a: f64,
    pub n_b: f64,
    pub var_a: f64,
    pub var_b: f64,
    pub q_a: Option<f64>,
    pub q_b: Option<f64>,
    pub s1_a: f64,
    pub s2_a: f64,
    pub s1_b: f64,
    pub s2_b: f64,
}

fn check_time(t: f64) {
    assert!(
        t.is_finite() && t >= 0.0,
        "time must be finite and non-negative, got {t}"
    );
}

/// Mean occupations `(n_a, n_b)`.
///
/// `n_a = [1/2 + Re E(2 omega_prime, t) / 2] sinh^2 r` and `n_b` with the
/// opposite sign, so `n_a + n_b = sinh^2 r` identically.
pub fn mean_numbers(p: &ModelParams, t: f64) -> (f64, f64) {
    check_time(t);
    let sh = p.r.sinh();
    let sh2 = sh * sh;
    let re = envelope(2.0 * p.omega_prime, p.gamma, t).re;
    // Re E is in [-1, 1], so both results are non-negative in exact and
    // floating-point arithmetic alike.
    ((0.5 + 0.5 * re) * sh2, (0.5 - 0.5 * re) * sh2)
}

/// Number variances `(var_a, var_b)`.
///
/// Term groups multiply `sinh^2 r cosh^2 r`, `sinh^4 r`, and `sinh^2 r`;
/// the squared-envelope terms enter as `Re(E^2)` and `|E|^2` of the
/// `2 omega_prime` envelope and as `Re E` of the `4 omega_prime` one. The
/// two modes differ only in the sign of the `Re E(2 omega_prime)` term.
pub fn number_variances(p: &ModelParams, t: f64) -> (f64, f64) {
    check_time(t);
    let sh = p.r.sinh();
    let ch = p.r.cosh();
    let sh2 = sh * sh;
    let sh2ch2 = (sh * ch) * (sh * ch);
    let sh4 = sh2 * sh2;

    let e2 = envelope(2.0 * p.omega_prime, p.gamma, t);
    let e4 = envelope(4.0 * p.omega_prime, p.gamma, t);
    let e2sq_re = (e2 * e2).re;
    let e2abs2 = e2.norm_sqr();

    let g_shch_a = 0.75 + e2.re + 0.25 * e4.re;
    let g_shch_b = 0.75 - e2.re + 0.25 * e4.re;
    let g_sh4 = 0.125 + 0.125 * e4.re - 0.125 * (e2sq_re + e2abs2);
    let g_sh2 = 0.125 - 0.125 * e4.re;

    let var_a = g_shch_a * sh2ch2 + g_sh4 * sh4 + g_sh2 * sh2;
    let var_b = g_shch_b * sh2ch2 + g_sh4 * sh4 + g_sh2 * sh2;
    (clamp_variance(var_a, sh2ch2), clamp_variance(var_b, sh2ch2))
}

// Rounding can leave a variance a hair below zero when the exact value is
// zero (e.g. mode b at t=0). Absorb only that; a genuinely negative value
// would indicate a defect and must surface.
fn clamp_variance(v: f64, scale: f64) -> f64 {
    if v < 0.0 && v > -1e-9 * scale.max(1.0) {
        0.0
    } else {
        v
    }
}

// Same policy for oracle-side variances, where the natural scale is O(1).
pub(crate) fn clamp_tiny_negative(v: f64) -> f64 {
    if v < 0.0 && v > -1e-10 {
        0.0
    } else {
        v
    }
}

/// Mandel Q for both modes with the default occupation floor.
pub fn mandel_q(p: &ModelParams, t: f64) -> (Option<f64>, Option<f64>) {
    let floor = MANDEL_Q_FLOOR_SCALE * p.r.sinh().powi(2);
    mandel_q_with_floor(p, t, floor)
}

/// Mandel Q `(var - n) / n`, or `None` where `n <= floor`.
pub fn mandel_q_with_floor(p: &ModelParams, t: f64, floor: f64) -> (Option<f64>, Option<f64>) {
    let (n_a, n_b) = mean_numbers(p, t);
    let (var_a, var_b) = number_variances(p, t);
    let q = |n: f64, var: f64| if n > floor { Some(var / n - 1.0) } else { None };
    (q(n_a, var_a), q(n_b, var_b))
}

// Shared bracket of the squeezing formulas: envelopes at -2w, 2(W-w),
// -2(W+w) where W = omega_prime, w = omega. The b-mode bracket flips the
// sign of the first term and carries the pump phase.
fn squeezing_brackets(p: &ModelParams, t: f64) -> (f64, f64) {
    let shch = p.r.sinh() * p.r.cosh();
    let e_w = envelope(-2.0 * p.omega, p.gamma, t);
    let e_dm = envelope(2.0 * (p.omega_prime - p.omega), p.gamma, t);
    let e_dp = envelope(-2.0 * (p.omega_prime + p.omega), p.gamma, t);
    let eiphi = C64::from_polar(1.0, p.phi);
    let x_a = ((e_w + 0.5 * e_dm + 0.5 * e_dp) * eiphi).re * shch;
    let pump = C64::from_polar(1.0, p.phi - 2.0 * p.theta);
    let x_b = ((-e_w + 0.5 * e_dm + 0.5 * e_dp) * pump).re * shch;
    (x_a, x_b)
}

/// Exact squeezing coefficients.
///
/// `s1 = 2 n + x`, `s2 = 2 n - x` per mode, where `x` is the real part of a
/// three-envelope bracket rotated by the squeeze phase (and, for mode `b`,
/// by twice the pump phase). Both coefficients are bounded below by -1.
pub fn squeezing_exact(p: &ModelParams, t: f64) -> SqueezingCoefficients {
    check_time(t);
    let (n_a, n_b) = mean_numbers(p, t);
    let (x_a, x_b) = squeezing_brackets(p, t);
    SqueezingCoefficients {
        s1_a: 2.0 * n_a + x_a,
        s2_a: 2.0 * n_a - x_a,
        s1_b: 2.0 * n_b + x_b,
        s2_b: 2.0 * n_b - x_b,
    }
}

/// Squeezing coefficients with every envelope replaced by its small
/// `nu/gamma` form `cos(nu t) exp(-nu^2 t / (2 gamma))`, i.e. oscillation
/// frequencies `omega_prime`, `omega`, `omega_prime ± omega` with Gaussian
/// decay rates `2 f^2 / gamma`.
///
/// Returns `UnitaryLimitUnsupported` for `Gamma::UnitaryLimit`: the
/// expansion is in `1/gamma`, which has no meaning there (use
/// [`squeezing_exact`], which is pure phases in that limit).
pub fn squeezing_large_gamma(p: &ModelParams, t: f64) -> Result<LargeGammaSqueezing> {
    check_time(t);
    let g = p.gamma.finite_rate()?;
    let sh = p.r.sinh();
    let ch = p.r.cosh();
    let sh2 = sh * sh;
    let shch = sh * ch;

    // cos(2 f t) e^{-2 f^2 t / gamma}: the envelope of frequency 2f with
    // sin(x) -> x substitutions in both modulus and phase.
    let osc = |f: f64| (2.0 * f * t).cos() * (-2.0 * f * f * t / g).exp();

    let rabi = osc(p.omega_prime);
    let w = osc(p.omega);
    let dm = osc(p.omega_prime - p.omega);
    let dp = osc(p.omega_prime + p.omega);

    let phase_a = p.phi.cos();
    let phase_b = (p.phi - 2.0 * p.theta).cos();
    let x_a = (w + 0.5 * dm + 0.5 * dp) * phase_a * shch;
    let x_b = (-w + 0.5 * dm + 0.5 * dp) * phase_b * shch;

    let n2_a = (1.0 + rabi) * sh2;
    let n2_b = (1.0 - rabi) * sh2;
    Ok(LargeGammaSqueezing {
        coeffs: SqueezingCoefficients {
            s1_a: n2_a + x_a,
            s2_a: n2_a - x_a,
            s1_b: n2_b + x_b,
            s2_b: n2_b - x_b,
        },
        domain_warning: p.omega.max(p.omega_prime) / g > 0.1,
    })
}

/// Long-time limits of the squeezing coefficients for finite rate.
///
/// Away from `omega_prime = omega` every bracket envelope decays and all
/// four coefficients tend to `sinh^2 r`. At exact degeneracy the
/// `2 (omega_prime - omega)` envelope is constant 1 and the limits split to
/// `sinh^2 r ± sinh r cosh r / 2`; the state stays squeezed at infinity iff
/// additionally `0 < tanh r < 1/2`.
///
/// The limit statement assumes the decaying envelopes actually decay, i.e.
/// no commensurate revival `2 omega_prime / gamma` in `2 pi Z`; see
/// [`crate::params::envelope_decay_rate`].
pub fn stationary_values(p: &ModelParams) -> Result<StationaryValues> {
    p.gamma.finite_rate()?;
    let sh = p.r.sinh();
    let ch = p.r.cosh();
    let generic = sh * sh;
    let scale = p.omega.abs().max(p.omega_prime.abs());
    let degenerate = (p.omega_prime - p.omega).abs() <= DEGENERACY_REL_TOL * scale;
    let tanh_r = p.r.tanh();
    Ok(StationaryValues {
        generic,
        special_plus: degenerate.then_some(generic + 0.5 * sh * ch),
        special_minus: degenerate.then_some(generic - 0.5 * sh * ch),
        squeezed_at_infinity: degenerate && 0.0 < tanh_r && tanh_r < 0.5,
    })
}

/// All observables at one time.
pub fn observable_point(p: &ModelParams, t: f64) -> ObservablePoint {
    let (n_a, n_b) = mean_numbers(p, t);
    let (var_a, var_b) = number_variances(p, t);
    let (q_a, q_b) = mandel_q(p, t);
    let s = squeezing_exact(p, t);
    ObservablePoint {
        t,
        n_a,
        n_b,
        var_a,
        var_b,
        q_a,
        q_b,
        s1_a: s.s1_a,
        s2_a: s.s2_a,
        s1_b: s.s1_b,
        s2_b: s.s2_b,
    }
}

#[cfg(test)]
// Reference constants below are frozen at full precision on purpose.
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::params::Gamma;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    const SH2_R2: f64 = 13.154116418008243315;
    const SH2_R03: f64 = 0.092732609121133851876;
    const TWO_SH2CH2_R2: f64 = 372.36979031304452216;
    const COSH4: f64 = 27.308232836016486629;
    const STATIONARY_MINUS_R03: f64 = -0.066430786415926465905;
    const EXP_P06_M1: f64 = 0.82211880039050897488;
    const EXP_M06_M1: f64 = -0.45118836390597356737;
    const ATANH_HALF: f64 = 0.5493061443340548457;

    fn params(omega: f64, omega_prime: f64, gamma: Gamma, r: f64) -> ModelParams {
        ModelParams::zero_phase(omega, omega_prime, gamma, r).unwrap()
    }

    #[test]
    fn initial_values_are_exact() {
        let p = params(0.7, 1.3, Gamma::Finite(50.0), 2.0);
        let (n_a, n_b) = mean_numbers(&p, 0.0);
        assert_relative_eq!(n_a, SH2_R2, max_relative = 1e-15);
        assert_eq!(n_b, 0.0);
        let (var_a, var_b) = number_variances(&p, 0.0);
        assert_relative_eq!(var_a, TWO_SH2CH2_R2, max_relative = 1e-14);
        assert_eq!(var_b, 0.0);
        let (q_a, q_b) = mandel_q(&p, 0.0);
        assert_relative_eq!(q_a.unwrap(), COSH4, max_relative = 1e-13);
        assert!(q_b.is_none());
    }

    #[test]
    fn initial_squeezing_is_hyperbolic() {
        let p = params(0.7, 1.3, Gamma::Finite(50.0), 0.3);
        let s = squeezing_exact(&p, 0.0);
        assert_relative_eq!(s.s1_a, EXP_P06_M1, max_relative = 1e-13);
        assert_relative_eq!(s.s2_a, EXP_M06_M1, max_relative = 1e-13);
        assert_eq!(s.s1_b, 0.0);
        assert_eq!(s.s2_b, 0.0);
    }

    #[test]
    fn vacuum_input_stays_vacuum() {
        let p = params(0.4, 2.0, Gamma::Finite(10.0), 0.0);
        for &t in &[0.0, 0.5, 3.0, 40.0] {
            let pt = observable_point(&p, t);
            assert_eq!((pt.n_a, pt.n_b, pt.var_a, pt.var_b), (0.0, 0.0, 0.0, 0.0));
            assert_eq!((pt.s1_a, pt.s2_a, pt.s1_b, pt.s2_b), (0.0, 0.0, 0.0, 0.0));
            assert!(pt.q_a.is_none() && pt.q_b.is_none());
        }
    }

    #[test]
    fn unitary_limit_is_rabi_exchange() {
        let p = params(0.0, 1.0, Gamma::UnitaryLimit, 2.0);
        let (n_a, n_b) = mean_numbers(&p, PI / 2.0);
        assert!(n_a.abs() < 1e-14 * SH2_R2);
        assert_relative_eq!(n_b, SH2_R2, max_relative = 1e-14);
        // pointwise cos^2 / sin^2 law
        for &t in &[0.3, 1.1, 2.9] {
            let (n_a, n_b) = mean_numbers(&p, t);
            assert_relative_eq!(n_a, SH2_R2 * t.cos().powi(2), max_relative = 1e-12);
            assert_relative_eq!(n_b, SH2_R2 * t.sin().powi(2), max_relative = 1e-12);
        }
    }

    #[test]
    fn equilibration_halves_the_occupation() {
        let p = params(0.0, 1.0, Gamma::Finite(100.0), 2.0);
        let (n_a, n_b) = mean_numbers(&p, 1e4);
        assert_relative_eq!(n_a, 6.5770582090041216573, max_relative = 1e-12);
        assert_relative_eq!(n_b, 6.5770582090041216573, max_relative = 1e-12);
    }

    // Reference values from a 50-digit Poisson-sum evaluation over
    // Heisenberg branches (independent of the closed forms under test).
    struct Reference {
        omega: f64,
        omega_prime: f64,
        gamma: f64,
        r: f64,
        phi: f64,
        theta: f64,
        t: f64,
        expected: [f64; 10],
    }

    fn check_reference(rf: &Reference) {
        let p = ModelParams::new(
            rf.omega,
            rf.omega_prime,
            Gamma::Finite(rf.gamma),
            rf.r,
            rf.phi,
            rf.theta,
        )
        .unwrap();
        let pt = observable_point(&p, rf.t);
        let got = [
            pt.n_a,
            pt.n_b,
            pt.var_a,
            pt.var_b,
            pt.q_a.unwrap(),
            pt.q_b.unwrap(),
            pt.s1_a,
            pt.s2_a,
            pt.s1_b,
            pt.s2_b,
        ];
        for (g, e) in got.iter().zip(rf.expected.iter()) {
            assert_relative_eq!(g, e, max_relative = 1e-12, epsilon = 1e-12);
        }
    }

    #[test]
    fn matches_branch_sum_reference_resonant_exchange() {
        check_reference(&Reference {
            omega: 0.0,
            omega_prime: 1.0,
            gamma: 100.0,
            r: 2.0,
            phi: 0.0,
            theta: 0.0,
            t: 1.0,
            expected: [
                3.89501273858837120101,
                9.25910367941987211359,
                39.6005033857911309964,
                191.448438692415994052,
                9.16697660407219309106,
                19.6767788028928486992,
                15.87073357949481954,
                -0.290682625141334736003,
                -0.691001735969931083703,
                37.7274164536494195381,
            ],
        });
    }

    #[test]
    fn matches_branch_sum_reference_weak_squeeze() {
        check_reference(&Reference {
            omega: 0.1,
            omega_prime: PI,
            gamma: 100.0,
            r: 0.3,
            phi: 0.0,
            theta: 0.0,
            t: 5.0,
            expected: [
                0.0636493094413954745304,
                0.0290832996797383773455,
                0.126421630795980773165,
                0.0508788187284564894113,
                0.986221561639758955467,
                0.749416994932748859578,
                0.36335938523728883671,
                -0.108762147471706938588,
                -0.0494145762046122377792,
                0.165747774923565747161,
            ],
        });
    }

    #[test]
    fn matches_branch_sum_reference_generic_phases() {
        check_reference(&Reference {
            omega: 10.0,
            omega_prime: 10.0,
            gamma: 1000.0,
            r: 0.3,
            phi: 0.7,
            theta: -0.4,
            t: 2.5,
            expected: [
                0.0734793501264735920306,
                0.0192532589946602598454,
                0.148886819488307727682,
                0.0303775833984942063407,
                1.02624028699276518191,
                0.577789163222662225189,
                0.384666915591804392759,
                -0.0907495150859100246366,
                0.0776692115089383747401,
                -0.000656175530297335358686,
            ],
        });
    }

    #[test]
    fn structural_identities_hold_on_a_grid() {
        let cases = [
            params(0.0, 1.0, Gamma::Finite(100.0), 2.0),
            params(0.1, PI, Gamma::Finite(100.0), 0.3),
            params(10.0, 10.0, Gamma::Finite(100.0), 0.3),
            params(10.0, 10.0 + 1e-7, Gamma::Finite(100.0), 0.4),
            ModelParams::new(3.0, 0.5, Gamma::Finite(7.0), 1.0, 1.2, -2.2).unwrap(),
            params(0.5, 2.0, Gamma::UnitaryLimit, 1.5),
        ];
        for p in &cases {
            let sh2 = p.r.sinh().powi(2);
            let ch2 = p.r.cosh().powi(2);
            for i in 0..60 {
                let t = 0.25 * i as f64;
                let pt = observable_point(p, t);
                assert_relative_eq!(pt.n_a + pt.n_b, sh2, max_relative = 1e-12);
                assert_relative_eq!(
                    pt.s1_a + pt.s2_a,
                    4.0 * pt.n_a,
                    max_relative = 1e-12,
                    epsilon = 1e-13
                );
                assert_relative_eq!(
                    pt.s1_b + pt.s2_b,
                    4.0 * pt.n_b,
                    max_relative = 1e-12,
                    epsilon = 1e-13
                );
                // variance difference identity, denominators guarded
                let lhs = pt.var_a - pt.var_b;
                let rhs = 2.0 * ch2 * (pt.n_a - pt.n_b);
                let scale = pt.var_a.abs().max(pt.var_b.abs()).max(rhs.abs()).max(1e-30);
                assert!(
                    (lhs - rhs).abs() <= 1e-10 * scale,
                    "var identity at t={t}: {lhs} vs {rhs}"
                );
                // Heisenberg bound
                for (s1, s2) in [(pt.s1_a, pt.s2_a), (pt.s1_b, pt.s2_b)] {
                    assert!(s1 >= -1.0 && s2 >= -1.0);
                    assert!((1.0 + s1) * (1.0 + s2) >= 1.0 - 1e-10);
                }
                assert!(pt.var_a >= 0.0 && pt.var_b >= 0.0);
            }
        }
    }

    #[test]
    fn full_phase_turns_leave_squeezing_unchanged() {
        use std::f64::consts::TAU;
        let base = ModelParams::new(0.4, 1.1, Gamma::Finite(30.0), 0.8, 0.9, -1.3).unwrap();
        let turned =
            ModelParams::new(0.4, 1.1, Gamma::Finite(30.0), 0.8, 0.9 + TAU, -1.3 + TAU).unwrap();
        for i in 0..20 {
            let t = 0.35 * i as f64;
            let s0 = squeezing_exact(&base, t);
            let s1 = squeezing_exact(&turned, t);
            assert_relative_eq!(s0.s1_a, s1.s1_a, max_relative = 1e-12, epsilon = 1e-14);
            assert_relative_eq!(s0.s2_b, s1.s2_b, max_relative = 1e-12, epsilon = 1e-14);
        }
    }

    #[test]
    fn degenerate_point_reaches_stationary_squeezing() {
        let p = params(10.0, 10.0, Gamma::Finite(100.0), 0.3);
        let s = squeezing_exact(&p, 10.0);
        assert!((s.s2_b - STATIONARY_MINUS_R03).abs() < 1e-6);
        assert!((s.s2_b - (-0.066433)).abs() < 1e-4);
    }

    #[test]
    fn large_gamma_matches_exact_at_t_zero_and_on_a_grid() {
        let p = params(0.1, PI, Gamma::Finite(1e4), 0.3);
        let exact0 = squeezing_exact(&p, 0.0);
        let approx0 = squeezing_large_gamma(&p, 0.0).unwrap();
        assert!(!approx0.domain_warning);
        assert_relative_eq!(approx0.coeffs.s1_a, exact0.s1_a, max_relative = 1e-14);
        assert_relative_eq!(
            approx0.coeffs.s2_b,
            exact0.s2_b,
            max_relative = 1e-14,
            epsilon = 1e-15
        );

        // measured worst case on this grid is 8.5e-7; frozen bound 1e-6
        let mut max_diff: f64 = 0.0;
        for i in 0..=500 {
            let t = i as f64 / 50.0;
            let e = squeezing_exact(&p, t);
            let a = squeezing_large_gamma(&p, t).unwrap().coeffs;
            for d in [
                a.s1_a - e.s1_a,
                a.s2_a - e.s2_a,
                a.s1_b - e.s1_b,
                a.s2_b - e.s2_b,
            ] {
                max_diff = max_diff.max(d.abs());
            }
        }
        assert!(max_diff <= 1e-6, "max deviation {max_diff:e}");
    }

    #[test]
    fn large_gamma_frozen_point() {
        let p = params(0.1, PI, Gamma::Finite(1e4), 0.3);
        let a = squeezing_large_gamma(&p, 5.0).unwrap().coeffs;
        assert_relative_eq!(a.s1_a, 0.526847344331539536056, max_relative = 1e-13);
        assert_relative_eq!(a.s2_a, -0.15773837282624922445, max_relative = 1e-13);
        assert_relative_eq!(a.s1_b, -0.000778367568603416704788, max_relative = 1e-12);
        assert_relative_eq!(a.s2_b, 0.00259983254784851260319, max_relative = 1e-12);
    }

    #[test]
    fn large_gamma_long_time_settles_to_sinh_squared() {
        let p = params(0.1, PI, Gamma::Finite(1e3), 0.3);
        let a = squeezing_large_gamma(&p, 1e6).unwrap().coeffs;
        for s in [a.s1_a, a.s2_a, a.s1_b, a.s2_b] {
            assert_relative_eq!(s, SH2_R03, max_relative = 1e-7);
        }
    }

    #[test]
    fn large_gamma_domain_warning_and_unitary_rejection() {
        let p = params(0.1, PI, Gamma::Finite(10.0), 0.3);
        assert!(squeezing_large_gamma(&p, 1.0).unwrap().domain_warning);
        let p = params(0.1, PI, Gamma::UnitaryLimit, 0.3);
        assert!(matches!(
            squeezing_large_gamma(&p, 1.0),
            Err(Error::UnitaryLimitUnsupported)
        ));
    }

    #[test]
    fn stationary_values_branch_on_degeneracy() {
        let p = params(10.0, 10.0, Gamma::Finite(100.0), 0.3);
        let s = stationary_values(&p).unwrap();
        assert_relative_eq!(s.generic, SH2_R03, max_relative = 1e-14);
        assert_relative_eq!(
            s.special_minus.unwrap(),
            STATIONARY_MINUS_R03,
            max_relative = 1e-13
        );
        assert!(s.squeezed_at_infinity);

        let p = params(10.0, 10.0, Gamma::Finite(100.0), 0.6);
        assert!(!stationary_values(&p).unwrap().squeezed_at_infinity);

        let p = params(10.0, 11.0, Gamma::Finite(100.0), 0.3);
        let s = stationary_values(&p).unwrap();
        assert!(s.special_plus.is_none() && s.special_minus.is_none());
        assert!(!s.squeezed_at_infinity);

        // boundary magnitude atanh(1/2)
        let p = params(1.0, 1.0, Gamma::Finite(5.0), ATANH_HALF - 1e-6);
        assert!(stationary_values(&p).unwrap().squeezed_at_infinity);
        let p = params(1.0, 1.0, Gamma::Finite(5.0), ATANH_HALF + 1e-6);
        assert!(!stationary_values(&p).unwrap().squeezed_at_infinity);
        let p = params(1.0, 1.0, Gamma::Finite(5.0), 0.0);
        assert!(!stationary_values(&p).unwrap().squeezed_at_infinity);
    }
}
