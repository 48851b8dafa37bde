use thiserror::Error;

#[derive(Debug, Error)]
pub enum IsingError {
    #[error("invalid geometry: {0}")]
    Geometry(String),

    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),

    #[error("interface walk exceeded the step budget of {budget} (malformed configuration)")]
    MalformedConfiguration { budget: usize },
}

pub type Result<T> = std::result::Result<T, IsingError>;
