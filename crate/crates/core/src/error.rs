use thiserror::Error;

/// Errors surfaced by fallible operations across the crate.
///
/// Structural misuse (out-of-range grade index, mismatched matrix shapes)
/// panics instead; these variants cover conditions reachable from user input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("direction ({x}, {y}, {z}) has norm {norm:.17}, too far from 1 to renormalize")]
    NonUnitDirection { x: f64, y: f64, z: f64, norm: f64 },

    #[error("tolerance must be a non-negative finite number, got {eps}")]
    InvalidTolerance { eps: f64 },

    #[error("multivector has norm {norm:e}, below the invertibility cutoff")]
    NonInvertible { norm: f64 },

    #[error("multivector is not a versor: x * reverse(x) has non-scalar residual {residual:e}")]
    NotVersor { residual: f64 },

    #[error(
        "directions are parallel: |a x b| = {cross_norm:e} leaves the rotation axis undefined"
    )]
    DegenerateDirections { cross_norm: f64 },

    #[error("ensemble weights ({w_plus}, {w_minus}) must be non-negative and sum to 1")]
    InvalidWeights { w_plus: f64, w_minus: f64 },

    #[error("preselection weights must be non-negative and sum to 1")]
    InvalidPreselection,

    #[error("analyzer chain must contain at least one direction")]
    EmptyChain,

    #[error("sweep step must lie in (0, pi], got {step}")]
    InvalidStep { step: f64 },

    #[error("operator is not Hermitian: max |M - adjoint(M)| = {residual:e}")]
    NotHermitian { residual: f64 },
}
