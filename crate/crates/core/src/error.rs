use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("InvalidBasis: basis must be a positive integer, got {0}")]
    InvalidBasis(i64),

    #[error("PoleProximity: t = {t} is within {guard} of the pole at {pole:.5}")]
    PoleProximity { t: f64, pole: f64, guard: f64 },

    #[error("DomainExceeded: t = {t} lies beyond the pole at {pole:.5}")]
    DomainExceeded { t: f64, pole: f64 },

    #[error("DomainExceeded: t = {t} is outside the domain {domain}")]
    OutsideDomain { t: f64, domain: String },

    #[error("QuadratureFailure: estimated error {estimate:e} above tolerance {tolerance:e}")]
    QuadratureFailure { estimate: f64, tolerance: f64 },

    #[error("IntegrationFailure: {0}")]
    IntegrationFailure(String),

    #[error("NegativeRadicand: {0}")]
    NegativeRadicand(String),

    #[error("MissingB: solution type {0} requires the parameter B")]
    MissingB(&'static str),

    #[error("InvalidSpec: {0}")]
    InvalidSpec(String),

    #[error("InvalidConfig: {0}")]
    InvalidConfig(String),

    #[error("UnsupportedType: {0}")]
    UnsupportedType(String),

    #[error("RootBracketFailure: {0}")]
    RootBracketFailure(String),

    #[error("UnknownId: {0}")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
