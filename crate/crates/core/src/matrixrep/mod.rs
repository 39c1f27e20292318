//! Circulant, companion and Cayley-digraph matrices over `Q`, with exact
//! minimal polynomials and the constructions built on them.

mod dense;
mod krylov;
mod spectra;
mod structures;
mod subfield;

pub use dense::DenseRatMatrix;
pub use krylov::{
    circulant_minimal_polynomial, circulant_minimal_polynomial_checked, element_minimal_polynomial, minimal_polynomial,
};
pub use spectra::{
    delta_minimal_polynomial, path_characteristic_polynomial, path_cycle_spectrum_check, smallest_circulant_order,
    symmetric_representation,
};
pub use structures::{CayleyDigraph, CirculantMatrix, CompanionMatrix, ToDense};
pub use subfield::{
    cayley_partition, hoffman_polynomial, ideal_canonical, subfield_representation, IdealGenerator,
    SubfieldRepresentation,
};

use thiserror::Error;

use crate::numtheory::NumTheoryError;
use crate::polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("{rows}x{cols} matrix cannot hold {entries} entries")]
    ShapeMismatch { rows: usize, cols: usize, entries: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("representer of degree {degree} does not fit order {order}")]
    RepresenterTooLong { order: usize, degree: usize },
    #[error("circulant order must be positive")]
    ZeroOrder,
    #[error("companion polynomial must be monic of degree at least 1")]
    NotMonic,
    #[error("connection set must be non-empty")]
    EmptyConnection,
    #[error("connection element {element} is outside 1..{modulus}")]
    ConnectionOutOfRange { element: u64, modulus: u64 },
    #[error("{k} does not divide {p} - 1")]
    BadDivisor { p: u64, k: u64 },
    #[error("matrix entries are not all 0 or 1")]
    NotZeroOne,
    #[error("row and column sums are not all equal")]
    NotRegular,
    #[error("digraph is not strongly connected")]
    NotStronglyConnected,
    #[error("x - {degree} does not divide the minimal polynomial")]
    FactorMissing { degree: i64 },
    #[error("J = g(A) failed entrywise")]
    HoffmanIdentityFailed,
    #[error("ideal modulus is the zero polynomial")]
    ZeroModulus,
    #[error("order {n} is below the minimum {min}")]
    OrderTooSmall { n: u64, min: u64 },
    #[error("order {0} is odd")]
    OddOrder(u64),
    #[error("divisor-product and Krylov minimal polynomials differ")]
    DualPathMismatch,
    #[error("subfield representation check failed: {0}")]
    SubfieldCheckFailed(String),
    #[error(transparent)]
    NumTheory(#[from] NumTheoryError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl MatrixError {
    pub fn kind(&self) -> &'static str {
        match self {
            MatrixError::ShapeMismatch { .. } => "ShapeMismatch",
            MatrixError::NotSquare { .. } => "NotSquare",
            MatrixError::RepresenterTooLong { .. } => "RepresenterTooLong",
            MatrixError::ZeroOrder => "ZeroOrder",
            MatrixError::NotMonic => "NotMonic",
            MatrixError::EmptyConnection => "EmptyConnection",
            MatrixError::ConnectionOutOfRange { .. } => "ConnectionOutOfRange",
            MatrixError::BadDivisor { .. } => "BadDivisor",
            MatrixError::NotZeroOne => "NotZeroOne",
            MatrixError::NotRegular => "NotRegular",
            MatrixError::NotStronglyConnected => "NotStronglyConnected",
            MatrixError::FactorMissing { .. } => "FactorMissing",
            MatrixError::HoffmanIdentityFailed => "HoffmanIdentityFailed",
            MatrixError::ZeroModulus => "ZeroModulus",
            MatrixError::OrderTooSmall { .. } => "OrderTooSmall",
            MatrixError::OddOrder(_) => "OddOrder",
            MatrixError::DualPathMismatch => "DualPathMismatch",
            MatrixError::SubfieldCheckFailed(_) => "SubfieldCheckFailed",
            MatrixError::NumTheory(e) => e.kind(),
            MatrixError::Poly(e) => e.kind(),
        }
    }
}
