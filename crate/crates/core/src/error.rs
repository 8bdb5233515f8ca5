use thiserror::Error;

/// Errors raised by grid construction, the walk engine and the experiment harness.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("side must be at least 2 (got {0})")]
    SideTooSmall(usize),

    #[error("honeycomb grids need an even side (got {0})")]
    OddHoneycombSide(usize),

    #[error("unknown grid kind `{0}` (expected triangular, rectangular or honeycomb)")]
    UnknownGridKind(String),

    #[error("vertex ({x},{y}) is outside a {side}x{side} grid")]
    VertexOutOfRange { x: usize, y: usize, side: usize },

    #[error("direction {direction} is not valid for degree {degree}")]
    DirectionOutOfRange { direction: usize, degree: usize },

    #[error("the self-loop direction has no neighbor")]
    LoopDirection,

    #[error("self-loop weight must be a finite non-negative number (got {0})")]
    NegativeWeight(f64),

    #[error("duplicate marked vertex ({x},{y})")]
    DuplicateVertex { x: usize, y: usize },

    #[error("state geometry does not match walk geometry")]
    GeometryMismatch,

    #[error("dense operator dimension {0} exceeds the limit of {limit}", limit = crate::reference::MAX_DENSE_DIM)]
    DimensionTooLarge(usize),

    #[error("at least one marked vertex is required")]
    NoMarkedVertices,

    #[error("cannot mark {m} of {n} vertices")]
    TooManyMarked { m: usize, n: usize },

    #[error("scaling reference needs N > m >= 1 (got N={n}, m={m})")]
    InvalidScalingArgs { n: usize, m: usize },

    #[error("log-log fit: {0}")]
    InvalidFit(String),

    #[error("ensemble size must be at least 1")]
    EmptyEnsemble,

    #[error("invalid {field}: {message}")]
    Config { field: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub(crate) fn config(field: &str, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.to_string(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
