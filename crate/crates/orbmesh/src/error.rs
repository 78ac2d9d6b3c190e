use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("unknown satellite id: shell {shell} plane {plane} slot {slot}")]
    UnknownSatellite {
        shell: usize,
        plane: usize,
        slot: usize,
    },
    #[error("numeric error: {0}")]
    Numeric(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("empty input: {0}")]
    Empty(String),
}

pub type Result<T> = std::result::Result<T, Error>;
