use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::MatrixError;
use crate::polyring::{parse_rational, rat, RatPolynomial};

/// Dense row-major matrix over `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseRatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl DenseRatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 || rows * cols != entries.len() {
            return Err(MatrixError::ShapeMismatch {
                rows,
                cols,
                entries: entries.len(),
            });
        }
        Ok(DenseRatMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        DenseRatMatrix { rows, cols, entries }
    }

    /// Integer matrix from nested rows.
    ///
    /// # Panics
    ///
    /// Panics on ragged or empty input.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self::from_fn(rows.len(), cols, |i, j| rat(rows[i][j]))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| BigRational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    /// The all-ones matrix `J`.
    pub fn all_ones(n: usize) -> Self {
        Self::from_fn(n, n, |_, _| BigRational::one())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn require_square(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero_one(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero() || e.is_one())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        DenseRatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn trace(&self) -> BigRational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<BigRational> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_polynomial(&self, p: &RatPolynomial) -> Result<Self, MatrixError> {
        let n = self.require_square()?;
        let mut acc = Self::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &acc * self;
            for i in 0..n {
                acc.entries[i * n + i] += c;
            }
        }
        Ok(acc)
    }

    /// `det(xI - A)` by the Faddeev–LeVerrier recursion.
    pub fn characteristic_polynomial(&self) -> Result<RatPolynomial, MatrixError> {
        let n = self.require_square()?;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &m;
            for i in 0..n {
                next.entries[i * n + i] += &coeffs[n - k + 1];
            }
            let am = self * &next;
            coeffs[n - k] = -am.trace() / rat(k as i64);
            m = next;
        }
        Ok(RatPolynomial::new(coeffs))
    }
}

impl Mul for &DenseRatMatrix {
    type Output = DenseRatMatrix;

    fn mul(self, rhs: &DenseRatMatrix) -> DenseRatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not compose");
        let mut entries = vec![BigRational::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        DenseRatMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries,
        }
    }
}

impl Add for &DenseRatMatrix {
    type Output = DenseRatMatrix;

    fn add(self, rhs: &DenseRatMatrix) -> DenseRatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shapes differ");
        DenseRatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<(String, String)>,
}

impl Serialize for DenseRatMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|e| (e.numer().to_string(), e.denom().to_string()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DenseRatMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = MatrixJson::deserialize(deserializer)?;
        let entries = raw
            .entries
            .iter()
            .map(|(n, d)| {
                let num: BigInt = n
                    .trim()
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad numerator {n:?}")))?;
                let den = parse_rational(d).map_err(D::Error::custom)?;
                if den.is_zero() || !den.is_integer() {
                    return Err(D::Error::custom(format!("bad denominator {d:?}")));
                }
                Ok(BigRational::new(num, den.to_integer()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        DenseRatMatrix::new(raw.rows, raw.cols, entries).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let m = DenseRatMatrix::from_fn(1, 2, |_, j| BigRational::new(1.into(), (j as i64 + 1).into()));
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"rows":1,"cols":2,"entries":[["1","1"],["1","2"]]}"#);
        assert_eq!(serde_json::from_str::<DenseRatMatrix>(&s).unwrap(), m);
        let bad = r#"{"rows":2,"cols":2,"entries":[["1","1"]]}"#;
        assert!(serde_json::from_str::<DenseRatMatrix>(bad).is_err());
        let zero_den = r#"{"rows":1,"cols":1,"entries":[["1","0"]]}"#;
        assert!(serde_json::from_str::<DenseRatMatrix>(zero_den).is_err());
    }

    #[test]
    fn characteristic_polynomial_small() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3
        let m = DenseRatMatrix::from_i64_rows(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(
            m.characteristic_polynomial().unwrap(),
            RatPolynomial::from_i64s(&[3, -4, 1])
        );
        let z = DenseRatMatrix::zeros(3, 3);
        assert_eq!(z.characteristic_polynomial().unwrap(), RatPolynomial::x_pow(3));
    }

    #[test]
    fn polynomial_evaluation() {
        let m = DenseRatMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        // x^2 - 1 kills a reflection
        let p = RatPolynomial::from_i64s(&[-1, 0, 1]);
        assert_eq!(m.eval_polynomial(&p).unwrap(), DenseRatMatrix::zeros(2, 2));
        let rect = DenseRatMatrix::zeros(2, 3);
        assert!(matches!(rect.eval_polynomial(&p), Err(MatrixError::NotSquare { .. })));
    }
}
