use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid attempt: {0}")]
    InvalidAttempt(String),

    #[error("invalid question: {0}")]
    InvalidQuestion(String),

    #[error("attempt stream not sorted by timestamp at index {index}")]
    UnsortedStream { index: usize },

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("training diverged (non-finite loss) at epoch {epoch}")]
    Divergence { epoch: usize },

    #[error("insufficient overlap: {shared} shared keys, need at least 3")]
    InsufficientOverlap { shared: usize },

    #[error("zero variance in correlation input")]
    ZeroVariance,

    #[error("empty test set after user split")]
    EmptyTestSet,

    #[error("invalid prediction record: {0}")]
    InvalidPrediction(String),

    #[error("{rejected} of {total} input rows rejected (more than 1%): {sample}")]
    RejectRateExceeded {
        rejected: usize,
        total: usize,
        sample: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code class used by the command-line frontend:
    /// 2 usage/config, 3 data contract, 4 numerical divergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::EmptyTestSet | Error::Io(_) | Error::Json(_) => 2,
            Error::Divergence { .. } => 4,
            _ => 3,
        }
    }
}
