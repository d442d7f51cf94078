use thiserror::Error;

/// Errors produced by operator construction, spectral analysis, dynamics and
/// the continuum oracle.
#[derive(Debug, Error)]
pub enum Error {
    #[error("Fock cutoff must be at least 1")]
    InvalidCutoff,

    #[error("invalid physical parameters: {0}")]
    InvalidParams(String),

    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),

    #[error("dimension mismatch: state has {state} amplitudes, operator is {operator}×{operator}")]
    DimensionMismatch { state: usize, operator: usize },

    #[error("eigensolver failed: {0}")]
    EigenSolver(String),

    #[error("state vanishes before normalization (norm {norm:.3e} < {threshold:.1e})")]
    ZeroState { norm: f64, threshold: f64 },

    #[error(
        "cutoff convergence failure: x_mean deviates by {deviation:.3e} between N_cut = {n_cut} \
         and N_cut = {n_cut_doubled} (tolerance {tolerance:.1e})"
    )]
    ConvergenceFailure {
        n_cut: usize,
        n_cut_doubled: usize,
        deviation: f64,
        tolerance: f64,
        /// Per-sample |x_mean − x_mean_doubled| profile.
        profile: Vec<f64>,
    },

    #[error("time grid is not uniform (max spacing deviation {0:.3e})")]
    NonUniformGrid(f64),

    #[error("need at least {required} samples, got {actual}")]
    TooFewSamples { required: usize, actual: usize },

    #[error(
        "parity symmetry violation: diagonal-block matrix element {value:.3e} exceeds 1e-10; \
         the operator does not anticommute with the parity grading"
    )]
    SymmetryViolation { value: f64 },

    #[error("spatial grid is not symmetric about 0 (max |x[i] + x[n-1-i]| = {0:.3e})")]
    AsymmetricGrid(f64),

    #[error(
        "momentum quadrature did not converge: refinement still changes ⟨x̄(t)⟩ by {change:.3e} \
         (tolerance {tolerance:.1e}) at {points} points"
    )]
    QuadratureNonConvergence {
        change: f64,
        tolerance: f64,
        points: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
