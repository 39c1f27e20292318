use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::SearchError;
use crate::numtheory::{radical, ramanujan_sum, totient};
use crate::polyring::{cyclotomic, IntPolynomial};

/// Exponent form of `x^m - sum_{k in K} x^k - 1`.
///
/// Ordering is by degree, then lexicographic on the sorted inner exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSignature")]
pub struct SparseSignature {
    degree: u64,
    inner: Vec<u64>,
}

#[derive(Deserialize)]
struct RawSignature {
    degree: u64,
    inner: Vec<u64>,
}

impl TryFrom<RawSignature> for SparseSignature {
    type Error = SearchError;

    fn try_from(raw: RawSignature) -> Result<Self, SearchError> {
        SparseSignature::new(raw.degree, raw.inner)
    }
}

impl SparseSignature {
    /// Inner exponents may be given in any order but must be distinct and
    /// lie in `1..degree`.
    pub fn new(degree: u64, mut inner: Vec<u64>) -> Result<Self, SearchError> {
        if degree < 2 {
            return Err(SearchError::InvalidSignature(format!("degree {degree} is below 2")));
        }
        inner.sort_unstable();
        if inner.windows(2).any(|w| w[0] == w[1]) {
            return Err(SearchError::InvalidSignature("repeated inner exponent".into()));
        }
        if let Some(&k) = inner.iter().find(|&&k| k == 0 || k >= degree) {
            return Err(SearchError::InvalidSignature(format!(
                "inner exponent {k} outside 1..{degree}"
            )));
        }
        Ok(SparseSignature { degree, inner })
    }

    /// Reads a polynomial of the form `x^m - sum x^k - 1`.
    pub fn from_polynomial(f: &IntPolynomial) -> Result<Self, SearchError> {
        let bad = || SearchError::InvalidSignature(format!("{f} is not of the form x^m - sum x^k - 1"));
        let degree = f.degree().ok_or_else(bad)?;
        if !f.is_monic() || f.coeff(0) != -BigInt::one() {
            return Err(bad());
        }
        let mut inner = Vec::new();
        for k in 1..degree {
            let c = f.coeff(k);
            if c == -BigInt::one() {
                inner.push(k as u64);
            } else if !c.is_zero() {
                return Err(bad());
            }
        }
        Self::new(degree as u64, inner)
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn inner(&self) -> &[u64] {
        &self.inner
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.degree as usize + 1];
        coeffs[0] = -BigInt::one();
        coeffs[self.degree as usize] = BigInt::one();
        for &k in &self.inner {
            coeffs[k as usize] = -BigInt::one();
        }
        IntPolynomial::new(coeffs)
    }

    /// Membership in `A_n`: degree below `n` and divisible by `Phi_n`.
    pub fn is_member(&self, n: u64) -> bool {
        n >= 1
            && self.degree < n
            && self
                .to_polynomial()
                .divisible_by(&cyclotomic(n))
                .expect("Phi_n is nonzero")
    }

    /// Exponents of the roots of unity `T` with `sum_{t in T} zeta_n^t = 1`
    /// matching this member of `A_n`.
    pub fn signature_to_subset(&self, n: u64) -> Result<Vec<u64>, SearchError> {
        if !self.is_member(n) {
            return Err(SearchError::NotMember { n });
        }
        let base = n - self.degree;
        Ok(std::iter::once(base)
            .chain(self.inner.iter().map(|k| base + k))
            .collect())
    }

    /// `S_f = c_n(m) - sum_{k in K} c_n(k) - c_n(0)`, zero for every member.
    pub fn sg_statistic(&self, n: u64) -> i64 {
        ramanujan_sum(n, self.degree)
            - self.inner.iter().map(|&k| ramanujan_sum(n, k)).sum::<i64>()
            - ramanujan_sum(n, 0)
    }

    /// Substitutes `x -> x^t`.
    pub fn scaled(&self, t: u64) -> Self {
        SparseSignature {
            degree: self.degree * t,
            inner: self.inner.iter().map(|k| k * t).collect(),
        }
    }
}

impl fmt::Display for SparseSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// Inverse of [`SparseSignature::signature_to_subset`].
pub fn subset_to_signature(subset: &[u64], n: u64) -> Result<SparseSignature, SearchError> {
    let mut t = subset.to_vec();
    t.sort_unstable();
    if t.windows(2).any(|w| w[0] == w[1]) {
        return Err(SearchError::InvalidSubset("repeated exponent".into()));
    }
    let k0 = *t.first().ok_or_else(|| SearchError::InvalidSubset("empty".into()))?;
    if k0 == 0 || t.iter().any(|&x| x >= n) {
        return Err(SearchError::InvalidSubset(format!("exponents must lie in 1..{n}")));
    }
    let degree = n - k0;
    let s = SparseSignature::new(degree, t[1..].iter().map(|x| x - k0).collect())?;
    if !s.is_member(n) {
        return Err(SearchError::NotMember { n });
    }
    Ok(s)
}

/// `max(phi(n), ceil(n / 2))`; every member of `A_n` has larger degree.
pub fn lower_bound(n: u64) -> u64 {
    totient(n).max(n.div_ceil(2))
}

/// Carries a member of `A_{n0}` to `A_n` for `n0 = rad(n)`.
pub fn lift_squarefree(s: &SparseSignature, n0: u64, n: u64) -> Result<SparseSignature, SearchError> {
    if n == 0 || radical(n) != n0 {
        return Err(SearchError::BadRadical { n0, n });
    }
    if !s.is_member(n0) {
        return Err(SearchError::NotMember { n: n0 });
    }
    Ok(s.scaled(n / n0))
}
