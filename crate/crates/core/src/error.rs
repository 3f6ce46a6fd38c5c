use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("expected a {expected_rows}x{expected_cols} grid, got {detail}")]
    DimensionMismatch {
        expected_rows: usize,
        expected_cols: usize,
        detail: String,
    },
    #[error("color {color} is outside 1..={r}")]
    ColorOutOfRange { color: u64, r: u32 },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("index {index} is outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("need {needed} low-degree vertices on side {side}, only {available} qualify")]
    InsufficientVertices {
        side: char,
        needed: usize,
        available: usize,
    },
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("inconsistent model: {0}")]
    InconsistentModel(String),
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
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
