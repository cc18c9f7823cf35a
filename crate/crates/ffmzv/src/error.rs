use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid curve specification: {0}")]
    InvalidSpec(String),
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("specialization at d = {d} needs d >= {min}")]
    OutOfRange { d: i64, min: i64 },
    #[error("precision exhausted: {0}")]
    Precision(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
