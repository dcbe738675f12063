use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    #[error("declared degree {declared} is below the actual degree {actual}")]
    Degree { declared: u32, actual: u32 },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("matrix does not have full rank along the requested axis")]
    NotFullRank,

    #[error("resultant evaluation degenerate: every extraneous minor vanished")]
    EvaluationDegenerate,

    #[error("undefined: {0}")]
    Undefined(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
