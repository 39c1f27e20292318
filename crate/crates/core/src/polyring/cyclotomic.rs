use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{IntPolynomial, PolyError};
use crate::numtheory::{divisors, factorize, radical, ramanujan_sum, totient};

fn cache() -> &'static RwLock<HashMap<u64, IntPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial.
///
/// Square-free `n` is handled by dividing `x^n - 1` by every `Phi_d` with
/// `d | n, d < n`; every division is checked to be exact. Other `n` reuse the
/// square-free kernel: `Phi_n(x) = Phi_rad(n)(x^(n / rad(n)))`.
///
/// Results are memoized in a process-wide cache. Two threads may race to
/// compute the same entry; both produce identical values.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic(n: u64) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().read().expect("cache poisoned").get(&n) {
        return p.clone();
    }
    let value = compute(n);
    cache()
        .write()
        .expect("cache poisoned")
        .entry(n)
        .or_insert(value)
        .clone()
}

fn compute(n: u64) -> IntPolynomial {
    if n == 1 {
        return IntPolynomial::from_i64s(&[-1, 1]);
    }
    let n0 = radical(n);
    if n0 < n {
        return cyclotomic(n0).substitute_power((n / n0) as usize);
    }
    let mut acc = IntPolynomial::x_pow_minus_one(n as usize);
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        acc = acc
            .divide_exact(&cyclotomic(d))
            .expect("x^n - 1 is the product of Phi_d over d | n");
    }
    acc
}

/// Summary data for `Phi_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicProfile {
    pub n: u64,
    pub phi_n: IntPolynomial,
    pub totient: u64,
    pub radical: u64,
    /// Largest absolute coefficient, as a decimal string in JSON.
    #[serde(with = "bigint_string")]
    pub height: BigInt,
    pub flat: bool,
    /// Number of distinct odd primes dividing `n`.
    pub order: usize,
}

pub(crate) mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// # Panics
///
/// Panics if `n == 0`.
pub fn profile(n: u64) -> CyclotomicProfile {
    let phi_n = cyclotomic(n);
    let height = phi_n.height();
    CyclotomicProfile {
        n,
        totient: totient(n),
        radical: radical(n),
        flat: height.is_one(),
        order: factorize(n).expect("n >= 1").odd_prime_count(),
        height,
        phi_n,
    }
}

/// Elementary symmetric functions `e_1 .. e_count` of the primitive `n`-th
/// roots of unity, from the Newton identities with Ramanujan sums as the
/// power sums: `m e_m = sum_{i=1}^m (-1)^(i-1) e_(m-i) c_n(i)`.
pub fn newton_girard_coefficients(n: u64, count: usize) -> Result<Vec<BigInt>, PolyError> {
    let phi = totient(n) as usize;
    if count > phi {
        return Err(PolyError::CountTooLarge { count, totient: phi });
    }
    let power_sums: Vec<BigInt> = (0..=count as u64).map(|i| BigInt::from(ramanujan_sum(n, i))).collect();
    let mut e = vec![BigInt::one()];
    for m in 1..=count {
        let mut acc = BigInt::zero();
        for i in 1..=m {
            let term = &e[m - i] * &power_sums[i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(m));
        if !r.is_zero() {
            return Err(PolyError::NonIntegralCoefficient { index: m });
        }
        e.push(q);
    }
    e.remove(0);
    Ok(e)
}
