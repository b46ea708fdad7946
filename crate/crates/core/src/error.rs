use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExactError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("root counting is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("incompatible gauges: {0}")]
    GaugeMismatch(String),
    #[error("empty interval: lower bound is not below the upper bound")]
    EmptyInterval,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("seed ({n},-) needs alpha > {n}, got alpha = {alpha}")]
    SeedConstraint { n: u32, alpha: Rational },
    #[error("duplicate step ({n},{sign}) in chain")]
    DuplicateStep { n: u32, sign: char },
    #[error("transformation needs distinct energies, both are {0}")]
    CoincidentEnergies(Rational),
    #[error("the seed Wronskian vanishes identically")]
    ZeroWronskian,
    #[error("chain is not admissible: {0}")]
    NotAdmissible(String),
    #[error("exact cross-check failed: {0}")]
    Inconsistent(String),
    #[error("numerical failure: {0}")]
    Numeric(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
