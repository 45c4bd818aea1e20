//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Step rate must be a positive finite float. The infinite-rate case is
    /// spelled `Gamma::UnitaryLimit`, not a large or infinite f64.
    #[error("step rate gamma must be positive and finite, got {0}; use Gamma::UnitaryLimit for infinite rate")]
    NonPositiveGamma(f64),

    #[error("{name} must be finite and non-negative, got {value}")]
    NegativeFrequency { name: &'static str, value: f64 },

    #[error("squeeze magnitude r must be finite and non-negative, got {0}")]
    NegativeSqueeze(f64),

    #[error("{name} must be finite, got {value}")]
    NonFiniteInput { name: &'static str, value: f64 },

    /// Returned by step-count expansions: with no finite step rate there is
    /// no Poisson step distribution to sum over.
    #[error("operation needs a finite step rate; Gamma::UnitaryLimit has no step distribution")]
    UnitaryLimitUnsupported,

    #[error(
        "Poisson window edge k_hi={k_hi} exceeds the cap {cap}; raise the cap or reduce gamma*t"
    )]
    WindowOverflow { k_hi: u64, cap: u64 },

    #[error("two-mode Fock dimension {dim} exceeds the cap {cap}")]
    TruncationTooLarge { dim: usize, cap: usize },

    #[error("truncated squeezed state drops probability {budget:.3e}, above the allowed {bound:.3e}; raise n_max or lower r")]
    InsufficientTruncation { budget: f64, bound: f64 },

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("invalid time grid: {0}")]
    InvalidTimeGrid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
