//! Truncated two-mode Fock-space oracle: exact step-map evolution of the
//! density matrix.
//!
//! The coupling conserves total excitation `N = n_a + n_b`, so the
//! Hamiltonian is block diagonal over `N` and truncation by total
//! excitation introduces no dynamical leakage; the only truncation error is
//! the initial squeezed-vacuum tail mass. Within each block the pump phase
//! can be gauged away, leaving a real symmetric tridiagonal matrix whose
//! eigendecomposition drives both the step map and plain unitary evolution
//! via spectral phases (never by repeated matrix multiplication).
//!
//! Basis order: state `|n_a, n_b>` lives in block `N = n_a + n_b` at
//! offset `n_b`, i.e. global index `N (N + 1) / 2 + n_b`.

use std::collections::HashMap;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::analytic::{ObservablePoint, MANDEL_Q_FLOOR_SCALE};
use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::poisson::{Neumaier, PoissonTruncation};

/// Default cap on the truncated-space dimension `(n_max+1)(n_max+2)/2`.
pub const DEFAULT_DIM_CAP: usize = 20_000;

/// Default bound on the initial-state probability lost to truncation.
pub const DEFAULT_BUDGET_BOUND: f64 = 1e-10;

/// First global index of the total-excitation-`N` block.
pub fn block_offset(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Global basis index of `|n_a, n_b>`.
pub fn state_index(n_a: usize, n_b: usize) -> usize {
    block_offset(n_a + n_b) + n_b
}

/// Dimension of the space truncated at total excitation `n_max`.
pub fn truncated_dim(n_max: usize) -> usize {
    (n_max + 1) * (n_max + 2) / 2
}

/// Block-diagonal Hamiltonian with per-block eigendecompositions.
#[derive(Debug, Clone)]
pub struct BlockHamiltonian {
    pub n_max: usize,
    omega: f64,
    omega_prime: f64,
    theta: f64,
    /// Per-block eigenvalues, block `N` holding `N + 1` of them.
    pub eigenvalues: Vec<DVector<f64>>,
    /// Per-block unitary eigenvector matrices (columns are eigenvectors).
    pub eigenvectors: Vec<DMatrix<C64>>,
}

impl BlockHamiltonian {
    pub fn dim(&self) -> usize {
        truncated_dim(self.n_max)
    }

    /// Rebuild block `N` of the Hamiltonian from the parameters:
    /// diagonal `omega * N`, couplings `omega_prime e^{-i theta}
    /// sqrt((N-j)(j+1))` one step below the diagonal.
    pub fn block_matrix(&self, n: usize) -> DMatrix<C64> {
        let d = n + 1;
        let mut h = DMatrix::<C64>::zeros(d, d);
        for j in 0..d {
            h[(j, j)] = C64::new(self.omega * n as f64, 0.0);
        }
        for j in 0..n {
            let c = self.omega_prime * (((n - j) * (j + 1)) as f64).sqrt();
            let z = C64::from_polar(c, -self.theta);
            h[(j + 1, j)] = z;
            h[(j, j + 1)] = z.conj();
        }
        h
    }

    /// Eigenvalues of all blocks in global basis order.
    pub fn flat_eigenvalues(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.dim());
        for ev in &self.eigenvalues {
            out.extend(ev.iter().copied());
        }
        out
    }
}

/// Build and diagonalize all blocks up to `n_max` with the default
/// dimension cap.
pub fn build_hamiltonian(p: &ModelParams, n_max: usize) -> Result<BlockHamiltonian> {
    build_hamiltonian_capped(p, n_max, DEFAULT_DIM_CAP)
}

/// Build and diagonalize all blocks, rejecting dimensions above `dim_cap`.
///
/// The pump phase is gauged out by `D = diag(e^{-i j theta})`, which turns
/// each block into a real symmetric tridiagonal matrix; its orthogonal
/// eigenvectors are re-dressed with the same phases.
pub fn build_hamiltonian_capped(
    p: &ModelParams,
    n_max: usize,
    dim_cap: usize,
) -> Result<BlockHamiltonian> {
    let dim = truncated_dim(n_max);
    if dim > dim_cap {
        return Err(Error::TruncationTooLarge { dim, cap: dim_cap });
    }
    let mut eigenvalues = Vec::with_capacity(n_max + 1);
    let mut eigenvectors = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let d = n + 1;
        let mut t = DMatrix::<f64>::zeros(d, d);
        for j in 0..d {
            t[(j, j)] = p.omega * n as f64;
        }
        for j in 0..n {
            let c = p.omega_prime * (((n - j) * (j + 1)) as f64).sqrt();
            t[(j + 1, j)] = c;
            t[(j, j + 1)] = c;
        }
        let se = t.symmetric_eigen();
        let mut v = DMatrix::<C64>::zeros(d, d);
        for j in 0..d {
            let phase = C64::from_polar(1.0, -(j as f64) * p.theta);
            for col in 0..d {
                v[(j, col)] = phase * se.eigenvectors[(j, col)];
            }
        }
        eigenvalues.push(se.eigenvalues);
        eigenvectors.push(v);
    }
    Ok(BlockHamiltonian {
        n_max,
        omega: p.omega,
        omega_prime: p.omega_prime,
        theta: p.theta,
        eigenvalues,
        eigenvectors,
    })
}

/// Pure state on the truncated space.
#[derive(Debug, Clone)]
pub struct FockState {
    pub n_max: usize,
    pub amplitudes: DVector<C64>,
    /// Probability mass of the untruncated state outside the kept space.
    pub truncation_budget: f64,
}

/// Squeezed vacuum in mode `a` on the truncated space, with the default
/// budget bound.
pub fn squeezed_vacuum_fock(r: f64, phi: f64, n_max: usize) -> Result<FockState> {
    squeezed_vacuum_fock_bounded(r, phi, n_max, DEFAULT_BUDGET_BOUND)
}

/// Squeezed vacuum with an explicit budget bound.
///
/// Amplitudes sit on even `n_a` with `n_b = 0`:
/// `c_0 = 1 / sqrt(cosh r)` and
/// `c_{2(m+1)} = c_{2m} e^{i phi} tanh r sqrt((2m+1)(2m+2)) / (2(m+1))`,
/// which makes `<a^2> = + e^{i phi} sinh r cosh r` (matching
/// [`crate::params::squeezed_vacuum_moments`]).
pub fn squeezed_vacuum_fock_bounded(
    r: f64,
    phi: f64,
    n_max: usize,
    budget_bound: f64,
) -> Result<FockState> {
    if !(r.is_finite() && r >= 0.0) {
        return Err(Error::NegativeSqueeze(r));
    }
    if !phi.is_finite() {
        return Err(Error::NonFiniteInput {
            name: "phi",
            value: phi,
        });
    }
    let dim = truncated_dim(n_max);
    let mut amplitudes = DVector::<C64>::zeros(dim);
    let lambda = C64::from_polar(r.tanh(), phi);
    let mut c = C64::new(1.0 / r.cosh().sqrt(), 0.0);
    let mut kept = Neumaier::default();
    let mut m = 0usize;
    loop {
        amplitudes[state_index(2 * m, 0)] = c;
        kept.add(c.norm_sqr());
        if 2 * (m + 1) > n_max {
            break;
        }
        let num = ((2 * m + 1) * (2 * m + 2)) as f64;
        c = c * lambda * num.sqrt() / (2.0 * (m + 1) as f64);
        m += 1;
    }
    let truncation_budget = (1.0 - kept.value()).max(0.0);
    if truncation_budget > budget_bound {
        return Err(Error::InsufficientTruncation {
            budget: truncation_budget,
            bound: budget_bound,
        });
    }
    Ok(FockState {
        n_max,
        amplitudes,
        truncation_budget,
    })
}

/// Density matrix on the truncated space, basis as in [`state_index`].
#[derive(Debug, Clone)]
pub struct TruncatedDensityMatrix {
    pub n_max: usize,
    pub entries: DMatrix<C64>,
}

impl TruncatedDensityMatrix {
    pub fn from_pure(state: &FockState) -> Self {
        let entries = &state.amplitudes * state.amplitudes.adjoint();
        TruncatedDensityMatrix {
            n_max: state.n_max,
            entries,
        }
    }

    pub fn trace(&self) -> f64 {
        let mut acc = Neumaier::default();
        for i in 0..self.entries.nrows() {
            acc.add(self.entries[(i, i)].re);
        }
        acc.value()
    }

    /// `1 - trace`: truncation budget plus any step-window tail.
    pub fn trace_deficit(&self) -> f64 {
        1.0 - self.trace()
    }

    /// Largest entrywise deviation from Hermitian symmetry.
    pub fn hermiticity_drift(&self) -> f64 {
        let n = self.entries.nrows();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..=i {
                let d = (self.entries[(i, j)] - self.entries[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Smallest eigenvalue, via the real symmetric embedding
    /// `[[Re, -Im], [Im, Re]]` (its spectrum is the Hermitian spectrum,
    /// doubled). O(dim^3); intended for spot checks.
    pub fn min_eigenvalue(&self) -> f64 {
        let d = self.entries.nrows();
        let mut m = DMatrix::<f64>::zeros(2 * d, 2 * d);
        for i in 0..d {
            for j in 0..d {
                let z = self.entries[(i, j)];
                m[(i, j)] = z.re;
                m[(i + d, j + d)] = z.re;
                m[(i, j + d)] = -z.im;
                m[(i + d, j)] = z.im;
            }
        }
        // absorb sub-tolerance Hermiticity drift before the solver
        let sym = (&m + m.transpose()) * 0.5;
        let eig = sym.symmetric_eigen();
        eig.eigenvalues.min()
    }

    /// `<n_a + n_b>`: conserved by both evolution maps.
    pub fn total_excitation(&self) -> f64 {
        let mut acc = Neumaier::default();
        for n in 0..=self.n_max {
            for j in 0..=n {
                acc.add(n as f64 * self.entries[(block_offset(n) + j, block_offset(n) + j)].re);
            }
        }
        acc.value()
    }
}

/// Overlap fidelity `<psi| rho |psi>` of a pure reference with a state.
pub fn pure_state_fidelity(state: &FockState, rho: &TruncatedDensityMatrix) -> f64 {
    let v = &rho.entries * &state.amplitudes;
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..v.nrows() {
        acc += state.amplitudes[i].conj() * v[i];
    }
    acc.re
}

// rho in the Hamiltonian eigenbasis (to_eigen) or back, block pair by
// block pair; V is block diagonal so this is much cheaper than a dense
// conjugation.
fn conjugate_blocks(h: &BlockHamiltonian, m: &DMatrix<C64>, to_eigen: bool) -> DMatrix<C64> {
    let dim = h.dim();
    let mut out = DMatrix::<C64>::zeros(dim, dim);
    for bm in 0..=h.n_max {
        let (om, dm) = (block_offset(bm), bm + 1);
        let vm = &h.eigenvectors[bm];
        for bn in 0..=h.n_max {
            let (on, dn) = (block_offset(bn), bn + 1);
            let vn = &h.eigenvectors[bn];
            let block = m.view((om, on), (dm, dn)).clone_owned();
            let res = if to_eigen {
                vm.adjoint() * block * vn
            } else {
                vm * block * vn.adjoint()
            };
            out.view_mut((om, on), (dm, dn)).copy_from(&res);
        }
    }
    out
}

/// Step-map evolution: `rho(t) = sum_k w_k U^k rho0 U^{dag k}` with
/// `U = e^{-i H / gamma}`, evaluated in the eigenbasis where each matrix
/// element picks up the factor `sum_k w_k e^{-i k (lam_p - lam_q) / gamma}`.
///
/// The window must have been built for `mean = gamma * t`. Phase-factor
/// sums are cached per quantized eigenvalue difference: the spectrum is a
/// lattice, so only a few thousand distinct sums occur even though there
/// are tens of thousands of matrix elements.
pub fn kraus_evolve(
    h: &BlockHamiltonian,
    rho0: &TruncatedDensityMatrix,
    p: &ModelParams,
    t: f64,
    window: &PoissonTruncation,
) -> Result<TruncatedDensityMatrix> {
    let g = p.gamma.finite_rate()?;
    assert!(t >= 0.0, "time must be non-negative, got {t}");
    assert_eq!(
        h.n_max, rho0.n_max,
        "Hamiltonian and state truncations differ"
    );
    assert!(
        (window.mean - g * t).abs() <= 1e-9 * (g * t).max(1.0),
        "window built for mean {}, but gamma*t = {}",
        window.mean,
        g * t
    );
    if t == 0.0 {
        return Ok(rho0.clone());
    }

    let lam = h.flat_eigenvalues();
    let dim = h.dim();
    let mut rho_e = conjugate_blocks(h, &rho0.entries, true);

    // Quantum of the phase-per-step key: coarse enough that eigensolver
    // noise on equal lattice differences shares one entry, fine enough
    // (2^-41 rad/step) that distinct differences never merge.
    let quant = (1u64 << 41) as f64;
    let weights = window.weights();
    let k_lo = window.k_lo;
    let mut cache: HashMap<i64, C64> = HashMap::new();
    let mut phase_sum = |x: f64| -> C64 {
        let key = (x * quant).round() as i64;
        *cache.entry(key).or_insert_with(|| {
            let step = C64::from_polar(1.0, -x);
            let mut z = C64::from_polar(1.0, -(k_lo as f64) * x);
            let mut acc = C64::new(0.0, 0.0);
            for &w in weights {
                acc += w * z;
                z *= step;
            }
            acc
        })
    };

    for pi in 0..dim {
        for qi in 0..=pi {
            let f = phase_sum((lam[pi] - lam[qi]) / g);
            rho_e[(pi, qi)] *= f;
            if qi != pi {
                rho_e[(qi, pi)] *= f.conj();
            }
        }
    }

    Ok(TruncatedDensityMatrix {
        n_max: h.n_max,
        entries: conjugate_blocks(h, &rho_e, false),
    })
}

/// Plain unitary evolution `e^{-iHt} rho0 e^{iHt}` via spectral phases.
pub fn unitary_evolve(
    h: &BlockHamiltonian,
    rho0: &TruncatedDensityMatrix,
    t: f64,
) -> TruncatedDensityMatrix {
    assert_eq!(
        h.n_max, rho0.n_max,
        "Hamiltonian and state truncations differ"
    );
    if t == 0.0 {
        return rho0.clone();
    }
    let lam = h.flat_eigenvalues();
    let dim = h.dim();
    let mut rho_e = conjugate_blocks(h, &rho0.entries, true);
    for pi in 0..dim {
        for qi in 0..dim {
            rho_e[(pi, qi)] *= C64::from_polar(1.0, -(lam[pi] - lam[qi]) * t);
        }
    }
    TruncatedDensityMatrix {
        n_max: h.n_max,
        entries: conjugate_blocks(h, &rho_e, false),
    }
}

/// All observables of a state by direct trace formulas (ladder operators
/// applied index-wise; no dense operator matrices are formed).
pub fn observables_from_density(rho: &TruncatedDensityMatrix, t: f64) -> ObservablePoint {
    let n_max = rho.n_max;
    let e = &rho.entries;

    let mut n_a = Neumaier::default();
    let mut n_b = Neumaier::default();
    let mut n2_a = Neumaier::default();
    let mut n2_b = Neumaier::default();
    for n in 0..=n_max {
        for j in 0..=n {
            let pop = e[(state_index(n - j, j), state_index(n - j, j))].re;
            let (na, nb) = ((n - j) as f64, j as f64);
            n_a.add(na * pop);
            n_b.add(nb * pop);
            n2_a.add(na * na * pop);
            n2_b.add(nb * nb * pop);
        }
    }

    // <a>, <b>, <a^2>, <b^2>: Tr(A rho) couples |n_a, n_b> to the state
    // one or two quanta higher in the corresponding mode.
    let mut a1 = C64::new(0.0, 0.0);
    let mut b1 = C64::new(0.0, 0.0);
    let mut a2 = C64::new(0.0, 0.0);
    let mut b2 = C64::new(0.0, 0.0);
    for na in 0..=n_max {
        for nb in 0..=(n_max - na) {
            let i = state_index(na, nb);
            if na + nb < n_max {
                a1 += ((na + 1) as f64).sqrt() * e[(state_index(na + 1, nb), i)];
                b1 += ((nb + 1) as f64).sqrt() * e[(state_index(na, nb + 1), i)];
            }
            if na + nb + 2 <= n_max {
                a2 += (((na + 1) * (na + 2)) as f64).sqrt() * e[(state_index(na + 2, nb), i)];
                b2 += (((nb + 1) * (nb + 2)) as f64).sqrt() * e[(state_index(na, nb + 2), i)];
            }
        }
    }

    let n_a = n_a.value();
    let n_b = n_b.value();
    let var_a = crate::analytic::clamp_tiny_negative(n2_a.value() - n_a * n_a);
    let var_b = crate::analytic::clamp_tiny_negative(n2_b.value() - n_b * n_b);
    let floor = MANDEL_Q_FLOOR_SCALE * rho.total_excitation().max(0.0);
    let q = |n: f64, var: f64| if n > floor { Some(var / n - 1.0) } else { None };
    let s = |n: f64, x1: C64, x2: C64| {
        (
            2.0 * n + 2.0 * x2.re - 4.0 * x1.re * x1.re,
            2.0 * n - 2.0 * x2.re - 4.0 * x1.im * x1.im,
        )
    };
    let (s1_a, s2_a) = s(n_a, a1, a2);
    let (s1_b, s2_b) = s(n_b, b1, b2);
    ObservablePoint {
        t,
        n_a,
        n_b,
        var_a,
        var_b,
        q_a: q(n_a, var_a),
        q_b: q(n_b, var_b),
        s1_a,
        s2_a,
        s1_b,
        s2_b,
    }
}

/// Convenience: evolve the squeezed vacuum to time `t` and read
/// observables, building the window from the default tail target.
pub fn kraus_observables(p: &ModelParams, t: f64, n_max: usize) -> Result<ObservablePoint> {
    let g = p.gamma.finite_rate()?;
    let h = build_hamiltonian(p, n_max)?;
    let psi = squeezed_vacuum_fock(p.r, p.phi, n_max)?;
    let rho0 = TruncatedDensityMatrix::from_pure(&psi);
    let window = PoissonTruncation::with_defaults(g * t)?;
    let rho = kraus_evolve(&h, &rho0, p, t, &window)?;
    Ok(observables_from_density(&rho, t))
}
