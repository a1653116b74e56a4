use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty-set Hausdorff undefined")]
    EmptyHausdorff,

    #[error("sample count {k} out of range 1..={n}")]
    CountOutOfRange { k: usize, n: usize },

    #[error("point id {0} out of range")]
    PointOutOfRange(usize),

    #[error("ambient coordinates required")]
    MissingCoordinates,

    #[error("kernel computation supported for <= 2 parameters (got {0})")]
    TooManyParameters(usize),

    #[error("homology degree {degree} needs a {needed}-skeleton, complex has max_dim {have}")]
    InsufficientSkeleton {
        degree: usize,
        needed: usize,
        have: usize,
    },

    #[error("row grades of the two matrices differ")]
    RowGradeMismatch,

    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u32, u32),

    #[error("grade dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("slice_vertical needs a 2-parameter presentation (got {0})")]
    NotBifiltered(usize),

    #[error("line direction must be strictly positive")]
    NonPositiveDirection,

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("rate formula needs k >= 2 (got {0})")]
    SampleTooSmall(usize),

    #[error("no plateau found within the grid; try a larger or finer grid")]
    NoPlateau,

    #[error("log-log regression needs >= 2 strictly positive points")]
    NonPositiveData,

    #[error("vector is not in the span of the generators below its grade")]
    NotInSpan,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
