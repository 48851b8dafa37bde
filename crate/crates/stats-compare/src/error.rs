use thiserror::Error;

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("empty sample")]
    EmptySample,

    #[error("theory CDF is not monotone on the sample points (at x = {at})")]
    NonMonotoneTheory { at: f64 },

    #[error("scaling fit needs at least 3 sizes, got {0}")]
    TooFewSizes(usize),

    #[error("scaling fit requires positive distances, got {0}")]
    NonPositiveDelta(f64),

    #[error("martingale test requires increasing times")]
    TimesNotIncreasing,

    #[error(transparent)]
    Prob(#[from] analytic_prob::ProbError),

    #[error(transparent)]
    Loewner(#[from] loewner_core::LoewnerError),
}

pub type Result<T> = std::result::Result<T, StatsError>;
