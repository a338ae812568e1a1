use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ill-formed homomorphism: {0}")]
    IllFormedHom(String),

    #[error("elements belong to different groups")]
    MismatchedGroups,

    #[error("diagram did not stabilize within a window of {window} maps")]
    NotStabilized { window: usize },

    #[error("group is not finite: {0}")]
    NotFinite(String),

    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },

    #[error("carrier size mismatch: expected {expected}, found {found}")]
    CarrierMismatch { expected: usize, found: usize },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("degree {degree} exceeds truncation {truncation}; needs truncation >= {required}")]
    DegreeExceedsTruncation {
        degree: usize,
        truncation: usize,
        required: usize,
    },

    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),

    #[error("pushout leg is not injective on nondegenerate simplices")]
    NotCofibration,

    #[error("invalid simplicial map: {0}")]
    InvalidMap(String),

    #[error("space is not connected")]
    NotConnected,

    #[error("corpus lacks the base case {0}")]
    MissingBaseCase(String),

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
