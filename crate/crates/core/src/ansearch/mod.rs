//! Smallest-degree polynomials `x^m - sum_{k in K} x^k - 1` divisible by
//! `Phi_n`: bounds, explicit constructions, and exact search.
//!
//! Such a polynomial is the characteristic polynomial of a 0,1-companion
//! matrix whose minimal polynomial has `Phi_n` as a factor. The set of them
//! with `m < n` is written `A_n` throughout.

mod constructions;
mod grid;
mod report;
mod search;
mod signature;

pub use constructions::{
    best_constructive_upper, exact_two_prime, witness_even_count_divisor, witness_flat, witness_thm_main,
};
pub use report::{
    bounds_report, bounds_report_with, BoundReport, BoundsPolicy, ExactValue, Omission, SearchStatus, UpperBound,
    UpperSource,
};
pub use search::{enumerate_members, search_min, Strategy};
pub use signature::{lift_squarefree, lower_bound, subset_to_signature, SparseSignature};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("invalid exponent set: {0}")]
    InvalidSubset(String),
    #[error("signature is not a member of A_{n}")]
    NotMember { n: u64 },
    #[error("{d} is not a square-free divisor of {n} with an even number of primes")]
    BadDivisor { n: u64, d: u64 },
    #[error("{n} is not twice a product of at least two distinct odd primes")]
    BadShape { n: u64 },
    #[error("Phi_{0} is not flat")]
    NotFlat(u64),
    #[error("{0} is odd")]
    OddModulus(u64),
    #[error("no monomial of the transformed polynomial lies strictly inside the window for n = {0}")]
    NoInteriorMonomial(u64),
    #[error("{n0} is not the radical of {n}")]
    BadRadical { n0: u64, n: u64 },
    #[error("{n} has {count} distinct prime factors, expected 2")]
    WrongFactorCount { n: u64, count: usize },
    #[error("modulus {0} is below 2")]
    ModulusTooSmall(u64),
    #[error("unknown search strategy {0:?}")]
    UnknownStrategy(String),
    #[error("search budget exhausted; degrees from {lowest_unexplored_degree} on are unexplored")]
    BudgetExhausted {
        best_upper: Option<SparseSignature>,
        lowest_unexplored_degree: u64,
    },
}

impl SearchError {
    pub fn kind(&self) -> &'static str {
        match self {
            SearchError::InvalidSignature(_) => "InvalidSignature",
            SearchError::InvalidSubset(_) => "InvalidSubset",
            SearchError::NotMember { .. } => "NotMember",
            SearchError::BadDivisor { .. } => "BadDivisor",
            SearchError::BadShape { .. } => "BadShape",
            SearchError::NotFlat(_) => "NotFlat",
            SearchError::OddModulus(_) => "OddModulus",
            SearchError::NoInteriorMonomial(_) => "NoInteriorMonomial",
            SearchError::BadRadical { .. } => "BadRadical",
            SearchError::WrongFactorCount { .. } => "WrongFactorCount",
            SearchError::ModulusTooSmall(_) => "ModulusTooSmall",
            SearchError::UnknownStrategy(_) => "UnknownStrategy",
            SearchError::BudgetExhausted { .. } => "BudgetExhausted",
        }
    }
}
