use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("board does not fit the declared box: {0}")]
    BoxMismatch(String),
    #[error("coefficient sequence has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("pole in parameter: {0}")]
    Pole(String),
}

pub type Result<T> = std::result::Result<T, Error>;
