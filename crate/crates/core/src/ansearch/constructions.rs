use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{subset_to_signature, SearchError, SparseSignature};
use crate::numtheory::{divisors, factorize, UnitSet};
use crate::polyring::{cyclotomic, profile, IntPolynomial};

/// The member of degree `n - n/d` from the roots `zeta_n^(k n/d)`, `k` a unit
/// mod `d`, whose sum is `mu(d) = 1`.
pub fn witness_even_count_divisor(n: u64, d: u64) -> Result<SparseSignature, SearchError> {
    let bad = SearchError::BadDivisor { n, d };
    if d < 6 || !n.is_multiple_of(d) {
        return Err(bad);
    }
    let f = factorize(d).map_err(|_| bad.clone())?;
    if !f.is_squarefree() || f.prime_count() % 2 != 0 {
        return Err(bad);
    }
    let step = n / d;
    let subset: Vec<u64> = UnitSet::new(d).members().iter().map(|k| k * step).collect();
    subset_to_signature(&subset, n)
}

/// Smallest admissible divisor for [`witness_even_count_divisor`], which
/// gives the lowest degree.
pub(crate) fn best_even_count_divisor(n: u64) -> Option<u64> {
    divisors(n).into_iter().find(|&d| {
        d >= 6
            && factorize(d)
                .map(|f| f.is_squarefree() && f.prime_count() % 2 == 0)
                .unwrap_or(false)
    })
}

/// For `n = 2 p_1 p_2 ... p_k` with odd primes `p_1 < p_2 < ...` and
/// `k >= 2`: the larger of `v_1 = n / (2 p_1)` and `v_2`, the least exponent
/// of the shifted root set below, with the member of degree `n - v`.
pub fn witness_thm_main(n: u64) -> Result<(u64, SparseSignature), SearchError> {
    let bad = SearchError::BadShape { n };
    let f = factorize(n).map_err(|_| bad.clone())?;
    if !n.is_multiple_of(2) || !f.is_squarefree() || f.odd_prime_count() < 2 {
        return Err(bad);
    }
    let odd: Vec<u64> = f.primes().filter(|&p| p != 2).collect();
    let (p1, p2) = (odd[0], odd[1]);
    let shift = n / (2 * p2);
    let mut shifted: Vec<u64> = UnitSet::new(2 * p1)
        .members()
        .iter()
        .map(|r| (n * r / (2 * p1) + shift) % n)
        .chain((1..p2).filter(|&l| l != (p2 - 1) / 2).map(|l| n * l / p2 + shift))
        .collect();
    shifted.sort_unstable();
    let v1 = n / (2 * p1);
    let v2 = shifted[0];
    if v2 >= v1 {
        Ok((v2, subset_to_signature(&shifted, n)?))
    } else {
        Ok((v1, witness_even_count_divisor(n, 2 * p1)?))
    }
}

/// For even square-free `n >= 6` with flat `Phi_n`: the member
/// `x^(b + n/2) + x^b - (f_1 + x^(n/2) f_2)` where `Phi_n = f_1 - f_2`
/// splits by coefficient sign.
pub fn witness_flat(n: u64) -> Result<SparseSignature, SearchError> {
    if !n.is_multiple_of(2) {
        return Err(SearchError::OddModulus(n));
    }
    if n < 6 || !factorize(n).map_err(|_| SearchError::BadShape { n })?.is_squarefree() {
        return Err(SearchError::BadShape { n });
    }
    if !profile(n).flat {
        return Err(SearchError::NotFlat(n));
    }
    let half = (n / 2) as usize;
    let phi = cyclotomic(n);
    let mut coeffs = vec![BigInt::zero(); half + phi.coeffs().len()];
    for (i, c) in phi.coeffs().iter().enumerate() {
        if c.is_positive() {
            coeffs[i] += 1;
        } else if c.is_negative() {
            coeffs[i + half] += 1;
        }
    }
    let transformed = IntPolynomial::new(coeffs);
    let top = transformed.degree().expect("nonzero") as i64;
    let b = (0..half)
        .find(|&e| e as i64 > top - half as i64 && transformed.coeff(e).is_one())
        .ok_or(SearchError::NoInteriorMonomial(n))?;
    let star = &(&IntPolynomial::x_pow(b + half) + &IntPolynomial::x_pow(b)) - &transformed;
    let s = SparseSignature::from_polynomial(&star)?;
    if !s.is_member(n) {
        return Err(SearchError::NotMember { n });
    }
    Ok(s)
}

/// `(n / (p_1 p_2)) (p_1 p_2 - 1)`, the minimum degree in `A_n` when `n` has
/// exactly two prime factors.
pub fn exact_two_prime(n: u64) -> Result<u64, SearchError> {
    let f = factorize(n).map_err(|_| SearchError::WrongFactorCount { n, count: 0 })?;
    let count = f.prime_count();
    if count != 2 {
        return Err(SearchError::WrongFactorCount { n, count });
    }
    let r = f.radical();
    Ok(n / r * (r - 1))
}

/// Lowest-degree member among the constructions that apply to `n`.
pub fn best_constructive_upper(n: u64) -> Option<SparseSignature> {
    let even = best_even_count_divisor(n).and_then(|d| witness_even_count_divisor(n, d).ok());
    let main = witness_thm_main(n).ok().map(|(_, s)| s);
    let flat = witness_flat(n).ok();
    [even, main, flat].into_iter().flatten().min()
}
