//! Replayable check suites. Each suite recomputes one family of results
//! from scratch and reports a named pass/fail line per check.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ansearch::{
    enumerate_members, exact_two_prime, lower_bound, search_min, subset_to_signature, witness_flat, witness_thm_main,
    SearchError, SparseSignature, Strategy,
};
use crate::matrixrep::{
    delta_minimal_polynomial, element_minimal_polynomial, ideal_canonical, minimal_polynomial,
    path_cycle_spectrum_check, subfield_representation, symmetric_representation, DenseRatMatrix, ToDense,
};
use crate::numtheory::{divisors, is_prime, is_prime_power, ramanujan_sum, totient, UnitSet};
use crate::polyring::{cyclotomic, newton_girard_coefficients, profile, IntPolynomial, RatPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Cyclotomic,
    Ramanujan,
    NewtonGirard,
    TwoPrime,
    Emptiness,
    Sandwich,
    Cayley,
    Symmetric,
    Bijection,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Cyclotomic,
        Suite::Ramanujan,
        Suite::NewtonGirard,
        Suite::TwoPrime,
        Suite::Emptiness,
        Suite::Sandwich,
        Suite::Cayley,
        Suite::Symmetric,
        Suite::Bijection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cyclotomic => "cyclotomic",
            Suite::Ramanujan => "ramanujan",
            Suite::NewtonGirard => "newton-girard",
            Suite::TwoPrime => "two-prime",
            Suite::Emptiness => "emptiness",
            Suite::Sandwich => "sandwich",
            Suite::Cayley => "cayley",
            Suite::Symmetric => "symmetric",
            Suite::Bijection => "bijection",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite {0:?}")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, UnknownSuite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Limits for the search-based suites (two-prime, emptiness, sandwich,
/// bijection).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: Option<u64>,
}

impl VerifyOptions {
    fn allows(&self, n: u64) -> bool {
        self.max_n.is_none_or(|m| n <= m)
    }
}

pub fn run_suite(suite: Suite, options: &VerifyOptions) -> Vec<Check> {
    match suite {
        Suite::Cyclotomic => cyclotomic_suite(),
        Suite::Ramanujan => ramanujan_suite(),
        Suite::NewtonGirard => newton_girard_suite(),
        Suite::TwoPrime => two_prime_suite(options),
        Suite::Emptiness => emptiness_suite(options),
        Suite::Sandwich => sandwich_suite(options),
        Suite::Cayley => cayley_suite(),
        Suite::Symmetric => symmetric_suite(),
        Suite::Bijection => bijection_suite(options),
    }
}

pub fn run_all(options: &VerifyOptions) -> Vec<Check> {
    Suite::ALL.into_iter().flat_map(|s| run_suite(s, options)).collect()
}

fn first_failure<I: IntoIterator<Item = u64>>(items: I, ok: impl Fn(u64) -> bool) -> Option<u64> {
    items.into_iter().find(|&n| !ok(n))
}

fn summary(name: &str, failure: Option<u64>, what: &str) -> Check {
    match failure {
        None => Check::new(name, true, what),
        Some(n) => Check::new(name, false, format!("fails at n = {n}")),
    }
}

fn cyclotomic_suite() -> Vec<Check> {
    let product = first_failure(1..=200, |n| {
        divisors(n)
            .into_iter()
            .fold(IntPolynomial::one(), |acc, d| &acc * &cyclotomic(d))
            == IntPolynomial::x_pow_minus_one(n as usize)
    });
    let flat = first_failure(1..105, |n| profile(n).flat);
    let h105 = profile(105).height;
    vec![
        summary(
            "cyclotomic/product-identity",
            product,
            "prod_{d | n} Phi_d = x^n - 1 for n <= 200",
        ),
        summary("cyclotomic/flat-below-105", flat, "Phi_n flat for n < 105"),
        Check::new(
            "cyclotomic/height-105",
            h105 == BigInt::from(2),
            format!("height(Phi_105) = {h105}"),
        ),
    ]
}

/// The unique `c` with `Phi_n | P - c`, if the remainder of `P` is constant.
fn constant_residue(p: &IntPolynomial, n: u64) -> Option<BigInt> {
    let (_, rem) = p.div_rem_unit_leading(&cyclotomic(n))?;
    match rem.degree() {
        None => Some(BigInt::zero()),
        Some(0) => Some(rem.coeff(0)),
        Some(_) => None,
    }
}

fn ramanujan_suite() -> Vec<Check> {
    let mut bad = None;
    'outer: for n in 1..=100u64 {
        let units = UnitSet::new(n);
        for m in 0..n {
            let mut coeffs = vec![BigInt::zero(); n as usize];
            for k in units.members() {
                coeffs[(k * m % n) as usize] += 1;
            }
            let c = constant_residue(&IntPolynomial::new(coeffs), n);
            if c != Some(BigInt::from(ramanujan_sum(n, m))) {
                bad = Some((n, m));
                break 'outer;
            }
        }
    }
    vec![match bad {
        None => Check::new(
            "ramanujan/root-sum-oracle",
            true,
            "c_n(m) matches the residue of sum x^(km) for n <= 100",
        ),
        Some((n, m)) => Check::new("ramanujan/root-sum-oracle", false, format!("fails at n = {n}, m = {m}")),
    }]
}

fn newton_girard_suite() -> Vec<Check> {
    let failure = first_failure(1..=120, |n| {
        let phi = totient(n) as usize;
        let Ok(e) = newton_girard_coefficients(n, phi) else {
            return false;
        };
        let poly = cyclotomic(n);
        (1..=phi).all(|t| {
            let signed = if t % 2 == 0 {
                e[t - 1].clone()
            } else {
                -e[t - 1].clone()
            };
            poly.coeff(phi - t) == signed
        })
    });
    vec![summary(
        "newton-girard/coefficients",
        failure,
        "coefficient of x^(phi - t) equals (-1)^t e_t for n <= 120",
    )]
}

fn search_degree(n: u64) -> Result<Option<u64>, SearchError> {
    Ok(search_min(n, Strategy::Exhaustive, None)?.map(|s| s.degree()))
}

fn two_prime_suite(options: &VerifyOptions) -> Vec<Check> {
    let squarefree = [6u64, 10, 14, 15, 21, 22, 26, 33, 34, 35];
    let lifted = [12u64, 18, 20, 24];
    let mut checks = Vec::new();
    for n in squarefree.into_iter().chain(lifted).filter(|&n| options.allows(n)) {
        let expected = if squarefree.contains(&n) {
            n - 1
        } else {
            exact_two_prime(n).unwrap_or(0)
        };
        let found = search_degree(n);
        checks.push(Check::new(
            format!("two-prime/n={n}"),
            found == Ok(Some(expected)),
            format!("search {found:?}, expected {expected}"),
        ));
    }
    checks
}

fn emptiness_suite(options: &VerifyOptions) -> Vec<Check> {
    (2..=32u64)
        .filter(|&n| is_prime_power(n) && options.allows(n))
        .map(|n| {
            // a zero budget fails on the first search node
            let result = search_min(n, Strategy::Exhaustive, Some(0));
            Check::new(format!("emptiness/n={n}"), result == Ok(None), format!("{result:?}"))
        })
        .collect()
}

fn sandwich_suite(options: &VerifyOptions) -> Vec<Check> {
    let n = 30;
    if !options.allows(n) {
        return Vec::new();
    }
    let lower = lower_bound(n);
    let mut checks = vec![Check::new("sandwich/lower", lower == 15, format!("lower = {lower}"))];
    let main = witness_thm_main(n);
    let main_ok = matches!(&main, Ok((8, s)) if s.degree() == 22
        && s.to_string() == "x^22 - x^20 - x^19 - x^13 - x - 1"
        && s.is_member(n));
    checks.push(Check::new("sandwich/thm-main", main_ok, format!("{main:?}")));
    let flat = witness_flat(n);
    let law = n / 2 + totient(n) - 1;
    let flat_ok = matches!(&flat, Ok(s) if s.degree() == law
        && s.to_string() == "x^22 - x^20 - x^19 - x^18 - x^8 - x - 1"
        && s.is_member(n));
    checks.push(Check::new("sandwich/flat", flat_ok, format!("{flat:?}")));
    let exact = search_degree(n);
    let exact_ok = matches!(exact, Ok(Some(v)) if lower < v && v <= 22);
    checks.push(Check::new("sandwich/exact", exact_ok, format!("search {exact:?}")));
    checks
}

fn cayley_check(p: u64, r: u64) -> Result<(), String> {
    let rep = subfield_representation(p, r).map_err(|e| e.to_string())?;
    let k = (p - 1) / r;
    let q = element_minimal_polynomial(p, &rep.matrix.representer().to_rational());
    if q.degree() != Some(k as usize) {
        return Err(format!("deg q = {:?}, expected {k}", q.degree()));
    }
    let a = rep.matrix.dense();
    let r_q = BigRational::from_integer(BigInt::from(r));
    let expected = &RatPolynomial::linear_root(r_q.clone()) * &q;
    if minimal_polynomial(&a).map_err(|e| e.to_string())? != expected {
        return Err("minimal polynomial is not (x - r) q".into());
    }
    let g = q.scale(&(BigRational::from_integer(BigInt::from(p)) / q.eval(&r_q)));
    if a.eval_polynomial(&g).map_err(|e| e.to_string())? != DenseRatMatrix::all_ones(p as usize) {
        return Err("J != (p / q(r)) q(A)".into());
    }
    let ideal = ideal_canonical(&g, &expected).map_err(|e| e.to_string())?;
    if ideal.generator != q.monic() {
        return Err("<J> differs from <q(A)>".into());
    }
    Ok(())
}

fn cayley_suite() -> Vec<Check> {
    (3..=31u64)
        .filter(|&p| is_prime(p))
        .flat_map(|p| divisors(p - 1).into_iter().map(move |r| (p, r)))
        .map(|(p, r)| {
            let result = cayley_check(p, r);
            Check::new(
                format!("cayley/p={p},r={r}"),
                result.is_ok(),
                result
                    .err()
                    .unwrap_or_else(|| format!("degree {} subfield", (p - 1) / r)),
            )
        })
        .collect()
}

fn symmetric_suite() -> Vec<Check> {
    let mut checks: Vec<Check> = [5u64, 6, 7, 8, 12, 13, 17]
        .into_iter()
        .map(|n| {
            let delta = delta_minimal_polynomial(n);
            let ok = delta.degree() == Some(totient(n) as usize / 2)
                && symmetric_representation(n)
                    .ok()
                    .and_then(|c| minimal_polynomial(&c.dense()).ok())
                    .and_then(|mp| mp.rem(&delta).ok())
                    .is_some_and(|rem| rem.is_zero());
            Check::new(format!("symmetric/delta-factor/n={n}"), ok, format!("factor {delta}"))
        })
        .collect();
    let failure = first_failure((4..=40).step_by(2), |n| path_cycle_spectrum_check(n) == Ok(true));
    checks.push(summary(
        "symmetric/path-cycle-spectra",
        failure,
        "path on n/2 - 1 vertices matches the n-cycle without +-2 for even n <= 40",
    ));
    checks
}

/// Stored signature with vanishing statistic that is not a member.
pub fn statistic_counterexample() -> (u64, SparseSignature) {
    (6, SparseSignature::new(4, vec![2, 3]).expect("valid signature"))
}

const BIJECTION_SAMPLES: usize = 10_000;

fn random_signature(rng: &mut ChaCha8Rng, n: u64) -> SparseSignature {
    let m = rng.gen_range(2..n);
    let inner = (1..m).filter(|_| rng.gen_bool(0.5)).collect();
    SparseSignature::new(m, inner).expect("exponents lie in 1..m")
}

fn bijection_suite(options: &VerifyOptions) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in [6u64, 10, 12, 15, 30].into_iter().filter(|&n| options.allows(n)) {
        let mut rng = ChaCha8Rng::seed_from_u64(n);
        let pool: Vec<SparseSignature> = (2..n).flat_map(|m| enumerate_members(n, m, 200)).collect();
        let (mut members, mut others, mut failure) = (0usize, 0usize, None);
        for _ in 0..BIJECTION_SAMPLES {
            let s = if rng.gen_bool(0.5) {
                pool[rng.gen_range(0..pool.len())].clone()
            } else {
                random_signature(&mut rng, n)
            };
            let ok = if s.is_member(n) {
                members += 1;
                s.sg_statistic(n) == 0
                    && s.signature_to_subset(n)
                        .and_then(|t| subset_to_signature(&t, n))
                        .is_ok_and(|back| back == s)
            } else {
                others += 1;
                s.signature_to_subset(n) == Err(SearchError::NotMember { n })
            };
            if !ok && failure.is_none() {
                failure = Some(s);
            }
        }
        checks.push(Check::new(
            format!("bijection/n={n}"),
            failure.is_none(),
            match failure {
                None => format!("{members} members round-trip with S_f = 0; {others} non-members rejected"),
                Some(s) => format!("fails on {s}"),
            },
        ));
    }
    let (n, s) = statistic_counterexample();
    if options.allows(n) {
        checks.push(Check::new(
            "bijection/statistic-not-sufficient",
            s.sg_statistic(n) == 0 && !s.is_member(n),
            format!("{s} has S_f = 0 for n = {n} but is not divisible by Phi_{n}"),
        ));
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn constant_residue_detects_non_constants() {
        assert_eq!(constant_residue(&IntPolynomial::from_i64s(&[0, 1]), 6), None);
        assert_eq!(
            constant_residue(&IntPolynomial::from_i64s(&[0, 1, 0, 0, 0, 1]), 6),
            Some(BigInt::from(1))
        );
    }

    #[test]
    fn max_n_trims_search_suites() {
        let options = VerifyOptions { max_n: Some(10) };
        let names: Vec<String> = run_suite(Suite::TwoPrime, &options)
            .into_iter()
            .map(|c| c.name)
            .collect();
        assert_eq!(names, vec!["two-prime/n=6", "two-prime/n=10"]);
        assert!(run_suite(Suite::Sandwich, &options).is_empty());
    }
}
