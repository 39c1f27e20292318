//! Elementary multiplicative number theory.
//!
//! Everything here works on `u64` and uses trial division; the integers that
//! show up in cyclotomic constructions at desk scale stay far below the range
//! where that becomes a problem.

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumTheoryError {
    #[error("zero has no prime factorization")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("2 has no primitive root in [2, p-1]; an odd prime is required")]
    EvenPrime,
}

impl NumTheoryError {
    pub fn kind(&self) -> &'static str {
        match self {
            NumTheoryError::Zero => "Zero",
            NumTheoryError::NotPrime(_) => "NotPrime",
            NumTheoryError::EvenPrime => "EvenPrime",
        }
    }
}

/// Prime factorization `p1^e1 * ... * pk^ek` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    entries: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn entries(&self) -> &[(u64, u32)] {
        &self.entries
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().map(|&(p, _)| p)
    }

    pub fn prime_count(&self) -> usize {
        self.entries.len()
    }

    /// Number of distinct odd prime factors.
    pub fn odd_prime_count(&self) -> usize {
        self.primes().filter(|&p| p != 2).count()
    }

    pub fn is_squarefree(&self) -> bool {
        self.entries.iter().all(|&(_, e)| e == 1)
    }

    /// The factored integer.
    pub fn value(&self) -> u64 {
        self.entries.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn radical(&self) -> u64 {
        self.primes().product()
    }
}

pub fn factorize(n: u64) -> Result<Factorization, NumTheoryError> {
    if n == 0 {
        return Err(NumTheoryError::Zero);
    }
    let mut entries = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            entries.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        entries.push((rest, 1));
    }
    Ok(Factorization { entries })
}

fn factors_of_positive(n: u64) -> Factorization {
    assert!(n >= 1, "expected a positive integer");
    factorize(n).expect("n >= 1")
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let f = factors_of_positive(n);
    f.entries == [(n, 1)]
}

/// `true` when `n = p^k` for a prime `p` and `k >= 1`.
pub fn is_prime_power(n: u64) -> bool {
    n >= 2 && factors_of_positive(n).prime_count() == 1
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "expected a positive integer");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Möbius function.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn mobius(n: u64) -> i64 {
    let f = factors_of_positive(n);
    if !f.is_squarefree() {
        0
    } else if f.prime_count().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Euler's totient.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn totient(n: u64) -> u64 {
    factors_of_positive(n)
        .entries
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Product of the distinct primes dividing `n`; `radical(1) = 1`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn radical(n: u64) -> u64 {
    factors_of_positive(n).radical()
}

/// gcd with the convention `gcd(0, n) = n`.
pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc = 1u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// The reduced residues `U_n = {k : 1 <= k <= n, gcd(k, n) = 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitSet {
    modulus: u64,
    members: Vec<u64>,
}

impl UnitSet {
    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn new(n: u64) -> Self {
        assert!(n >= 1, "expected a positive integer");
        let members = (1..=n).filter(|&k| gcd(k, n) == 1).collect();
        UnitSet { modulus: n, members }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Smallest generator of the multiplicative group modulo an odd prime.
pub fn primitive_root(p: u64) -> Result<u64, NumTheoryError> {
    if !is_prime(p) {
        return Err(NumTheoryError::NotPrime(p));
    }
    if p == 2 {
        return Err(NumTheoryError::EvenPrime);
    }
    let order = p - 1;
    let cofactors: Vec<u64> = factors_of_positive(order).primes().map(|q| order / q).collect();
    (2..p)
        .find(|&a| cofactors.iter().all(|&e| mod_pow(a, e, p) != 1))
        .ok_or(NumTheoryError::NotPrime(p))
}

/// Ramanujan sum `c_n(m)`, evaluated as `mu(n/d) * phi(n) / phi(n/d)` with
/// `d = gcd(m, n)`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn ramanujan_sum(n: u64, m: u64) -> i64 {
    assert!(n >= 1, "expected a positive integer");
    let d = gcd(m % n, n);
    let q = n / d;
    mobius(q) * (totient(n) / totient(q)) as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(a: u64, p: u64) -> u64 {
        let mut x = a % p;
        let mut k = 1;
        while x != 1 {
            x = x * a % p;
            k += 1;
        }
        k
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().entries().is_empty());
        assert_eq!(factorize(12).unwrap().entries(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(105).unwrap().entries(), &[(3, 1), (5, 1), (7, 1)]);
        assert_eq!(factorize(0), Err(NumTheoryError::Zero));
        assert_eq!(factorize(999_983).unwrap().entries(), &[(999_983, 1)]);
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(6), 1);
    }

    #[test]
    fn totient_examples() {
        assert_eq!(totient(1), 1);
        for p in [2, 3, 5, 7, 11, 13, 97] {
            assert_eq!(totient(p), p - 1);
        }
        let brute = (1..=30).filter(|&k| gcd(k, 30) == 1).count() as u64;
        assert_eq!(brute, 8);
        assert_eq!(totient(30), brute);
        for n in 1..=200 {
            assert_eq!(totient(n) as usize, UnitSet::new(n).len(), "n = {n}");
        }
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical(12), 6);
        assert_eq!(radical(30), 30);
        assert_eq!(radical(1), 1);
        assert_eq!(radical(3u64.pow(5)), 3);
        assert_eq!(radical(2u64.pow(10)), 2);
    }

    #[test]
    fn unit_set_of_one() {
        assert_eq!(UnitSet::new(1).members(), &[1]);
        assert_eq!(UnitSet::new(10).members(), &[1, 3, 7, 9]);
    }

    #[test]
    fn primitive_root_examples() {
        assert_eq!(primitive_root(3), Ok(2));
        // 2 has order 3 mod 7, 3 has order 6
        assert_eq!(brute_order(2, 7), 3);
        assert_eq!(brute_order(3, 7), 6);
        assert_eq!(primitive_root(7), Ok(3));
        assert_eq!(brute_order(2, 31), 5);
        assert_eq!(brute_order(3, 31), 30);
        assert_eq!(primitive_root(31), Ok(3));
        assert_eq!(primitive_root(2), Err(NumTheoryError::EvenPrime));
        assert_eq!(primitive_root(9), Err(NumTheoryError::NotPrime(9)));
    }

    #[test]
    fn primitive_root_is_smallest_generator() {
        for p in (3..400).filter(|&p| is_prime(p)) {
            let g = primitive_root(p).unwrap();
            assert_eq!(brute_order(g, p), p - 1);
            assert!((2..g).all(|a| brute_order(a, p) < p - 1));
            for q in factorize(p - 1).unwrap().primes() {
                assert_ne!(mod_pow(g, (p - 1) / q, p), 1);
            }
        }
    }

    #[test]
    fn ramanujan_examples() {
        for n in 1..=50 {
            assert_eq!(ramanujan_sum(n, 0), totient(n) as i64);
            assert_eq!(ramanujan_sum(n, 1), mobius(n));
        }
        assert_eq!(ramanujan_sum(6, 1), 1);
        assert_eq!(ramanujan_sum(6, 2), -1);
    }

    #[test]
    fn divisor_sum_identities() {
        for n in 1..=200u64 {
            let ds = divisors(n);
            assert!(ds.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(ds.iter().map(|&d| totient(d)).sum::<u64>(), n);
            let mu: i64 = ds.iter().map(|&d| mobius(d)).sum();
            assert_eq!(mu, i64::from(n == 1));
        }
    }

    #[test]
    fn prime_power_detection() {
        let pp: Vec<u64> = (2..=32).filter(|&n| is_prime_power(n)).collect();
        assert_eq!(
            pp,
            vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
        );
    }
}
