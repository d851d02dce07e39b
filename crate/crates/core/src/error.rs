use thiserror::Error;

/// Errors surfaced by margin construction, discretization and the
/// rearrangement engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid margin parameter: {0}")]
    InvalidParameter(String),

    #[error("probability {0} outside [0, 1]")]
    ProbabilityOutOfRange(f64),

    #[error("grid size must be at least 1")]
    EmptyGrid,

    #[error("grid mode {mode} is infeasible for {family}: {reason}")]
    InfeasibleGridMode {
        mode: &'static str,
        family: String,
        reason: &'static str,
    },

    #[error("column lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("grids must share a common n (got {0} and {1})")]
    GridSizeMismatch(usize, usize),

    #[error("pairwise countermonotonic vector does not exist for these margins")]
    PcmInfeasible,

    #[error("n = {n} too small to resolve block of mass {q}")]
    PcmUnresolvedBlock { n: usize, q: f64 },

    #[error("cost not supported by this routine: {0}")]
    UnsupportedCost(&'static str),

    #[error("product objective requires strictly positive values")]
    NonPositiveProduct,

    #[error("subset enumeration limited to d <= {limit}, got d = {d}")]
    DimensionTooLarge { d: usize, limit: usize },

    #[error("margin is not unimodal-symmetric: {0}")]
    NotSymmetric(String),

    #[error("margin must have finite nonzero variance")]
    DegenerateVariance,

    #[error("alpha = {0} must lie strictly in (0, 1)")]
    AlphaOutOfRange(f64),

    #[error("tail grid has fewer than 2 points (alpha too close to the boundary for n)")]
    TailGridTooSmall,
}

pub type Result<T> = std::result::Result<T, Error>;
