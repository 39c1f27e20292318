//! Exact polynomial arithmetic over `Z` and `Q`, plus cyclotomic
//! polynomials and the quantities derived from them.

mod cyclotomic;
mod int;
mod rational;

pub use cyclotomic::{cyclotomic, newton_girard_coefficients, profile, CyclotomicProfile};
pub use int::IntPolynomial;
pub use rational::RatPolynomial;

pub(crate) use rational::{parse_rational, rat};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible: remainder of degree {remainder_degree}")]
    NotDivisible { remainder_degree: usize },
    #[error("quotient exists over Q but not over Z")]
    NonIntegralQuotient,
    #[error("the zero polynomial has no square-free part")]
    ZeroPolynomial,
    #[error("Newton-Girard step {index} produced a non-integer coefficient")]
    NonIntegralCoefficient { index: usize },
    #[error("requested {count} symmetric functions but phi(n) = {totient}")]
    CountTooLarge { count: usize, totient: usize },
    #[error("cannot parse coefficient {0:?}")]
    Parse(String),
}

impl PolyError {
    pub fn kind(&self) -> &'static str {
        match self {
            PolyError::DivisionByZero => "DivisionByZero",
            PolyError::NotDivisible { .. } => "NotDivisible",
            PolyError::NonIntegralQuotient => "NonIntegralQuotient",
            PolyError::ZeroPolynomial => "ZeroPolynomial",
            PolyError::NonIntegralCoefficient { .. } => "NonIntegralCoefficient",
            PolyError::CountTooLarge { .. } => "CountTooLarge",
            PolyError::Parse(_) => "Parse",
        }
    }
}
