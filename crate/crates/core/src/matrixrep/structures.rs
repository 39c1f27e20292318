use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{DenseRatMatrix, MatrixError};
use crate::polyring::IntPolynomial;

/// Matrices with a compact structured form that expand to a dense matrix.
pub trait ToDense {
    fn dense(&self) -> DenseRatMatrix;
}

/// `g(W_n)` where `W_n` is the companion matrix of `x^n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CirculantMatrix {
    order: usize,
    representer: IntPolynomial,
}

impl CirculantMatrix {
    pub fn new(order: usize, representer: IntPolynomial) -> Result<Self, MatrixError> {
        if order == 0 {
            return Err(MatrixError::ZeroOrder);
        }
        match representer.degree() {
            Some(degree) if degree >= order => Err(MatrixError::RepresenterTooLong { order, degree }),
            _ => Ok(CirculantMatrix { order, representer }),
        }
    }

    /// `W_n` itself.
    pub fn fundamental(order: usize) -> Result<Self, MatrixError> {
        let g = if order == 1 {
            IntPolynomial::one()
        } else {
            IntPolynomial::x_pow(1)
        };
        Self::new(order, g)
    }

    /// `sum_{s in S} W_n^s`; repeated exponents accumulate.
    pub fn from_exponents(order: usize, exponents: &[u64]) -> Result<Self, MatrixError> {
        if order == 0 {
            return Err(MatrixError::ZeroOrder);
        }
        let mut coeffs = vec![BigInt::zero(); order];
        for &s in exponents {
            coeffs[(s % order as u64) as usize] += 1;
        }
        Self::new(order, IntPolynomial::new(coeffs))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn representer(&self) -> &IntPolynomial {
        &self.representer
    }

    pub fn first_row(&self) -> Vec<BigInt> {
        (0..self.order).map(|i| self.representer.coeff(i)).collect()
    }

    pub fn is_scalar(&self) -> bool {
        self.representer.degree().is_none_or(|d| d == 0)
    }
}

impl ToDense for CirculantMatrix {
    fn dense(&self) -> DenseRatMatrix {
        let n = self.order;
        let row = self.first_row();
        DenseRatMatrix::from_fn(n, n, |i, j| BigRational::from_integer(row[(j + n - i) % n].clone()))
    }
}

/// Companion matrix of a monic integer polynomial: ones on the
/// superdiagonal, `-f_0 .. -f_{n-1}` along the last row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompanionMatrix {
    monic: IntPolynomial,
}

impl CompanionMatrix {
    pub fn new(monic: IntPolynomial) -> Result<Self, MatrixError> {
        if !monic.is_monic() || monic.degree().unwrap_or(0) == 0 {
            return Err(MatrixError::NotMonic);
        }
        Ok(CompanionMatrix { monic })
    }

    pub fn polynomial(&self) -> &IntPolynomial {
        &self.monic
    }
}

impl ToDense for CompanionMatrix {
    fn dense(&self) -> DenseRatMatrix {
        let n = self.monic.degree().expect("nonzero by construction");
        DenseRatMatrix::from_fn(n, n, |i, j| {
            if i + 1 == n {
                BigRational::from_integer(-self.monic.coeff(j))
            } else if j == i + 1 {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }
}

/// `Cay(Z_n, S)`: edge `i -> j` iff `(j - i) mod n` is in `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyDigraph {
    modulus: u64,
    connection: Vec<u64>,
}

impl CayleyDigraph {
    /// The connection set is sorted and deduplicated.
    pub fn new(modulus: u64, mut connection: Vec<u64>) -> Result<Self, MatrixError> {
        if connection.is_empty() {
            return Err(MatrixError::EmptyConnection);
        }
        if let Some(&element) = connection.iter().find(|&&s| s == 0 || s >= modulus) {
            return Err(MatrixError::ConnectionOutOfRange { element, modulus });
        }
        connection.sort_unstable();
        connection.dedup();
        Ok(CayleyDigraph { modulus, connection })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn connection(&self) -> &[u64] {
        &self.connection
    }

    pub fn out_degree(&self) -> usize {
        self.connection.len()
    }

    pub fn adjacency(&self) -> CirculantMatrix {
        CirculantMatrix::from_exponents(self.modulus as usize, &self.connection).expect("connection lies in 1..n")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cayley {\n");
        for i in 0..self.modulus {
            writeln!(out, "  {i};").unwrap();
        }
        for i in 0..self.modulus {
            for s in &self.connection {
                writeln!(out, "  {i} -> {};", (i + s) % self.modulus).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

impl ToDense for CayleyDigraph {
    fn dense(&self) -> DenseRatMatrix {
        self.adjacency().dense()
    }
}
