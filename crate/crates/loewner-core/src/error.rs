use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoewnerError {
    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("non-finite input")]
    NonFinite,

    #[error("evolution horizon too short: both probe extremes stay undecided")]
    HorizonTooShort,

    #[error("point {0} lies outside the closed strip")]
    OutsideStrip(num_complex::Complex64),

    #[error("chain is empty")]
    EmptyChain,
}

pub type Result<T> = std::result::Result<T, LoewnerError>;
