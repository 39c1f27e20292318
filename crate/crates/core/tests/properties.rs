use cyclorep::ansearch::{
    best_constructive_upper, bounds_report, lift_squarefree, lower_bound, search_min, witness_even_count_divisor,
    Strategy,
};
use cyclorep::matrixrep::{
    circulant_minimal_polynomial_checked, minimal_polynomial, CirculantMatrix, CompanionMatrix, ToDense,
};
use cyclorep::numtheory::{divisors, factorize, is_prime, is_prime_power, mobius, mod_pow, primitive_root, totient};
use cyclorep::polyring::{cyclotomic, IntPolynomial, RatPolynomial};
use proptest::prelude::*;

#[test]
fn divisor_sum_identities() {
    for n in 1..=200u64 {
        assert_eq!(divisors(n).iter().map(|&d| totient(d)).sum::<u64>(), n);
        let mu: i64 = divisors(n).iter().map(|&d| mobius(d)).sum();
        assert_eq!(mu, i64::from(n == 1));
    }
}

#[test]
fn primitive_roots_generate() {
    for p in (3..2000u64).filter(|&p| is_prime(p)) {
        let g = primitive_root(p).unwrap();
        for q in factorize(p - 1).unwrap().primes() {
            assert_ne!(mod_pow(g, (p - 1) / q, p), 1, "p = {p}");
        }
    }
}

#[test]
fn strict_lower_bound_and_transport() {
    for n in (2..=36u64).filter(|&n| !is_prime_power(n)) {
        let s = search_min(n, Strategy::Exhaustive, None).unwrap().unwrap();
        assert!(s.degree() > lower_bound(n), "n = {n}");
        assert!(s.degree() <= best_constructive_upper(n).unwrap().degree());
    }
    let s6 = search_min(6, Strategy::Exhaustive, None).unwrap().unwrap();
    let s12 = search_min(12, Strategy::Exhaustive, None).unwrap().unwrap();
    assert_eq!(s12.degree(), 2 * s6.degree());
    // the lifted witness has minimum degree but is not the lexicographic minimum
    let lifted = lift_squarefree(&s6, 6, 12).unwrap();
    assert!(lifted.is_member(12));
    assert_eq!(lifted.degree(), s12.degree());
    assert!(s12 <= lifted);
}

#[test]
fn reports_are_consistent_up_to_60() {
    for n in 2..=60u64 {
        let r = bounds_report(n).unwrap();
        assert!(r.is_consistent(), "n = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn companion_matrix_recovers_polynomial(c in proptest::collection::vec(-6i64..=6, 1..=12)) {
        let mut coeffs = c;
        coeffs.push(1);
        let f = IntPolynomial::from_i64s(&coeffs);
        let m = CompanionMatrix::new(f.clone()).unwrap().dense();
        prop_assert_eq!(minimal_polynomial(&m).unwrap(), f.to_rational());
    }

    #[test]
    fn circulant_dual_paths_agree(bits in proptest::collection::vec(0i64..=1, 1..=20)) {
        let c = CirculantMatrix::new(bits.len(), IntPolynomial::from_i64s(&bits)).unwrap();
        prop_assert!(circulant_minimal_polynomial_checked(&c).is_ok());
    }

    #[test]
    fn squarefree_part_of_square(c in proptest::collection::vec(-4i64..=4, 2..=6)) {
        let f = RatPolynomial::from_i64s(&c);
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        let g = &f * &f;
        prop_assert_eq!(g.squarefree_part().unwrap(), f.squarefree_part().unwrap());
    }

    #[test]
    fn cyclotomic_divides_x_n_minus_one(n in 1u64..300) {
        let q = IntPolynomial::x_pow_minus_one(n as usize).divide_exact(&cyclotomic(n));
        prop_assert!(q.is_ok());
        prop_assert_eq!(cyclotomic(n).degree(), Some(totient(n) as usize));
    }

    #[test]
    fn even_count_witnesses_are_members(n in 6u64..400) {
        for d in divisors(n) {
            if let Ok(s) = witness_even_count_divisor(n, d) {
                prop_assert!(s.is_member(n));
                prop_assert_eq!(s.sg_statistic(n), 0);
            }
        }
    }
}
