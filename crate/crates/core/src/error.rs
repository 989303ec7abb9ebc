use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rank {rank} outside supported range {min}..={max}")]
    RankOutOfRange { rank: usize, min: usize, max: usize },

    #[error("{what} requires rank {expected}, got {found}")]
    WrongRank {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("generator index {index} out of range 1..={rank}")]
    GeneratorIndex { index: usize, rank: usize },

    #[error("expected a vector of length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid signed permutation {0:?}")]
    InvalidPermutation(Vec<i8>),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("basis vectors are not orthonormal (max deviation {deviation:e})")]
    NotOrthonormal { deviation: f64 },

    #[error("plane index {index} has no partner in rank {rank}")]
    UnpairedIndex { index: usize, rank: usize },

    #[error("frame carries no Cartan eigensystem")]
    NotSpectralFrame,

    #[error("generator {generator} does not preserve the point set")]
    ClosureViolation { generator: usize },

    #[error("window dimension {0} unsupported (need at least 2)")]
    UnsupportedWindowDimension(usize),

    #[error("parallel dimension {found} does not match the requested patch ({expected}D)")]
    ParallelDimension { expected: usize, found: usize },

    #[error("parallel radius must be positive and finite, got {0}")]
    InvalidRadius(f64),

    #[error("rotation order must be at least 1, got {0}")]
    InvalidSymmetryOrder(u32),

    #[error("pattern is not two-dimensional")]
    NotPlanar,

    #[error("enumeration needs {candidates} candidate tuples (|x_i| <= {bound}), budget is {budget}")]
    BudgetExceeded {
        bound: i64,
        candidates: f64,
        budget: f64,
    },

    #[error("frame `{frame}` is not available for rank {rank}")]
    FrameUnavailable { frame: &'static str, rank: usize },
}
