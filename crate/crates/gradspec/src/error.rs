use thiserror::Error;

/// Errors produced by trace handling, statistical tests, and spectral
/// computations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} index {got} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        got: usize,
        max: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("non-finite value at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("too few usable samples: got {got}, need at least {need}")]
    TooFewSamples { got: usize, need: usize },

    #[error("no positive magnitudes in sample")]
    NoPositiveMagnitudes,

    #[error("degenerate fit: all tail samples are equal")]
    DegenerateFit,

    #[error("degenerate sample: zero variance")]
    ZeroVariance,

    #[error("sample value {value} lies below the tail cutoff {lambda_min}")]
    BelowCutoff { value: f64, lambda_min: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("trace format: {0}")]
    TraceFormat(String),

    #[error("idx format: {0}")]
    IdxFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("eigensolver did not converge within {0} QL iterations")]
    EigenNonConvergence(usize),

    #[error("power iteration did not converge within {0} iterations")]
    PowerIterNonConvergence(usize),

    #[error("problem too large for the dense route: n={n} exceeds limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("batch normalization requires batch size >= 2, got {0}")]
    BatchNormBatchSize(usize),

    #[error("model has batch normalization with unfrozen statistics: {0}")]
    UnfrozenBatchNorm(&'static str),

    #[error("training diverged: loss is not finite")]
    Diverged,

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    /// True for failures of the numerics themselves (as opposed to bad
    /// inputs); the CLI maps these to a distinct exit code.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonFinite { .. }
                | Error::EigenNonConvergence(_)
                | Error::PowerIterNonConvergence(_)
                | Error::Diverged
                | Error::Numerical(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
