use std::collections::VecDeque;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{
    element_minimal_polynomial, minimal_polynomial, CayleyDigraph, CirculantMatrix, DenseRatMatrix, MatrixError,
    ToDense,
};
use crate::numtheory::{mod_pow, primitive_root};
use crate::polyring::{rat, RatPolynomial};

fn check_divisor(p: u64, k: u64) -> Result<(), MatrixError> {
    if k == 0 || !(p - 1).is_multiple_of(k) {
        Err(MatrixError::BadDivisor { p, k })
    } else {
        Ok(())
    }
}

/// The `k` cosets `alpha^j <alpha^k>` of `Z_p^*` as connection sets, where
/// `alpha` is the smallest primitive root.
pub fn cayley_partition(p: u64, k: u64) -> Result<Vec<CayleyDigraph>, MatrixError> {
    let alpha = primitive_root(p)?;
    check_divisor(p, k)?;
    let r = (p - 1) / k;
    let h = mod_pow(alpha, k, p);
    let subgroup: Vec<u64> = (0..r).map(|i| mod_pow(h, i, p)).collect();
    (0..k)
        .map(|j| {
            let shift = mod_pow(alpha, j, p);
            CayleyDigraph::new(p, subgroup.iter().map(|x| x * shift % p).collect())
        })
        .collect()
}

/// An `r`-regular Cayley digraph on `Z_p` whose adjacency matrix represents
/// the degree-`(p-1)/r` subfield of `Q(zeta_p)`, with its certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubfieldRepresentation {
    pub prime: u64,
    pub regularity: u64,
    pub field_degree: u64,
    pub digraph: CayleyDigraph,
    pub matrix: CirculantMatrix,
    pub minimal_polynomial: RatPolynomial,
    /// Minimal polynomial of the eigenvalue sum `sum_{h in H} zeta_p^h`.
    pub eigenvalue_polynomial: RatPolynomial,
    /// `g` with `J = g(A)`.
    pub hoffman: RatPolynomial,
}

/// Builds and verifies the subfield representation for `(p, r)`.
pub fn subfield_representation(p: u64, r: u64) -> Result<SubfieldRepresentation, MatrixError> {
    primitive_root(p)?;
    check_divisor(p, r)?;
    let k = (p - 1) / r;
    let digraph = cayley_partition(p, k)?.swap_remove(0);
    let matrix = digraph.adjacency();
    let dense = matrix.dense();
    let minimal = minimal_polynomial(&dense)?;
    let eigen = element_minimal_polynomial(p, &matrix.representer().to_rational());
    if eigen.degree() != Some(k as usize) {
        return Err(MatrixError::SubfieldCheckFailed(format!(
            "eigenvalue sum has degree {:?}, expected {k}",
            eigen.degree()
        )));
    }
    let linear = RatPolynomial::linear_root(rat(r as i64));
    if minimal != &linear * &eigen {
        return Err(MatrixError::SubfieldCheckFailed(
            "minimal polynomial is not (x - r) times the eigenvalue polynomial".into(),
        ));
    }
    let hoffman = hoffman_polynomial(&dense)?;
    if ideal_canonical(&hoffman, &minimal)?.generator != eigen {
        return Err(MatrixError::SubfieldCheckFailed("<J> differs from <q(A)>".into()));
    }
    Ok(SubfieldRepresentation {
        prime: p,
        regularity: r,
        field_degree: k,
        digraph,
        matrix,
        minimal_polynomial: minimal,
        eigenvalue_polynomial: eigen,
        hoffman,
    })
}

fn reaches_all(n: usize, edge: impl Fn(usize, usize) -> bool) -> bool {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for (v, s) in seen.iter_mut().enumerate() {
            if !*s && edge(u, v) {
                *s = true;
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// The polynomial `g` with `J = g(A)` for the adjacency matrix of a regular,
/// strongly connected digraph.
pub fn hoffman_polynomial(m: &DenseRatMatrix) -> Result<RatPolynomial, MatrixError> {
    let n = m.require_square()?;
    if !m.is_zero_one() {
        return Err(MatrixError::NotZeroOne);
    }
    let rows = m.row_sums();
    let d = rows[0].clone();
    if rows.iter().chain(m.col_sums().iter()).any(|s| *s != d) {
        return Err(MatrixError::NotRegular);
    }
    let forward = reaches_all(n, |u, v| !m.get(u, v).is_zero());
    let backward = reaches_all(n, |u, v| !m.get(v, u).is_zero());
    if !(forward && backward) {
        return Err(MatrixError::NotStronglyConnected);
    }
    let degree = i64::try_from(d.to_integer()).expect("row sum fits the matrix order");
    let missing = MatrixError::FactorMissing { degree };
    let (q, rem) = minimal_polynomial(m)?.div_rem(&RatPolynomial::linear_root(d.clone()))?;
    if !rem.is_zero() {
        return Err(missing);
    }
    let qd = q.eval(&d);
    if qd.is_zero() {
        return Err(missing);
    }
    let g = q.scale(&(rat(n as i64) / qd));
    if m.eval_polynomial(&g)? != DenseRatMatrix::all_ones(n) {
        return Err(MatrixError::HoffmanIdentityFailed);
    }
    Ok(g)
}

/// Canonical generator of the ideal `<g(A)>` in `Q[A] = Q[x] / <p_A>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealGenerator {
    pub modulus_poly: RatPolynomial,
    pub generator: RatPolynomial,
}

impl IdealGenerator {
    pub fn same_ideal(&self, other: &IdealGenerator) -> bool {
        self.modulus_poly.monic() == other.modulus_poly.monic() && self.generator == other.generator
    }

    /// The whole ring `Q[A]`.
    pub fn is_unit(&self) -> bool {
        self.generator.degree() == Some(0)
    }
}

pub fn ideal_canonical(g: &RatPolynomial, modulus: &RatPolynomial) -> Result<IdealGenerator, MatrixError> {
    if modulus.is_zero() {
        return Err(MatrixError::ZeroModulus);
    }
    Ok(IdealGenerator {
        modulus_poly: modulus.clone(),
        generator: g.gcd(modulus),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::{divisors, is_prime};
    use crate::polyring::{cyclotomic, IntPolynomial};
    use num_rational::BigRational;

    fn rp(c: &[i64]) -> RatPolynomial {
        RatPolynomial::from_i64s(c)
    }

    #[test]
    fn partition_examples() {
        let conn = |p, k| -> Vec<Vec<u64>> {
            cayley_partition(p, k)
                .unwrap()
                .iter()
                .map(|g| g.connection().to_vec())
                .collect()
        };
        assert_eq!(conn(7, 2), vec![vec![1, 2, 4], vec![3, 5, 6]]);
        assert_eq!(conn(5, 4), vec![vec![1], vec![2], vec![4], vec![3]]);
        assert_eq!(conn(11, 1), vec![(1..11).collect::<Vec<u64>>()]);
        assert_eq!(cayley_partition(7, 4), Err(MatrixError::BadDivisor { p: 7, k: 4 }));
        assert_eq!(cayley_partition(9, 2).unwrap_err().kind(), "NotPrime");
        assert_eq!(cayley_partition(2, 1).unwrap_err().kind(), "EvenPrime");
    }

    #[test]
    fn partition_properties() {
        for p in (3..=31).filter(|&p| is_prime(p)) {
            for k in divisors(p - 1) {
                let parts = cayley_partition(p, k).unwrap();
                let mut all: Vec<u64> = parts.iter().flat_map(|g| g.connection().to_vec()).collect();
                all.sort_unstable();
                assert_eq!(all, (1..p).collect::<Vec<_>>(), "p = {p}, k = {k}");
                let first = minimal_polynomial(&parts[0].dense()).unwrap();
                for g in &parts {
                    assert_eq!(g.out_degree() as u64, (p - 1) / k);
                    assert_eq!(minimal_polynomial(&g.dense()).unwrap(), first);
                }
            }
        }
    }

    #[test]
    fn subfield_examples() {
        let s = subfield_representation(7, 3).unwrap();
        assert_eq!(s.digraph.connection(), &[1, 2, 4]);
        assert_eq!(s.minimal_polynomial, &rp(&[-3, 1]) * &rp(&[2, 1, 1]));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(s.hoffman, rp(&[2, 1, 1]).scale(&half));
        let s = subfield_representation(5, 2).unwrap();
        assert_eq!(s.digraph.connection(), &[1, 4]);
        assert_eq!(s.eigenvalue_polynomial, rp(&[-1, 1, 1]));
        let s = subfield_representation(13, 12).unwrap();
        assert_eq!(s.eigenvalue_polynomial, rp(&[1, 1]));
        assert_eq!(
            subfield_representation(7, 4),
            Err(MatrixError::BadDivisor { p: 7, k: 4 })
        );
    }

    #[test]
    fn hoffman_examples() {
        let k3 = DenseRatMatrix::from_i64_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(hoffman_polynomial(&k3).unwrap(), rp(&[1, 1]));
        let mut rows = vec![vec![0i64; 6]; 6];
        for block in [0, 3] {
            for i in 0..3 {
                rows[block + i][block + (i + 1) % 3] = 1;
            }
        }
        let two_cycles = DenseRatMatrix::from_i64_rows(&rows);
        assert_eq!(hoffman_polynomial(&two_cycles), Err(MatrixError::NotStronglyConnected));
        let path = DenseRatMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]);
        assert_eq!(hoffman_polynomial(&path), Err(MatrixError::NotRegular));
        let twos = DenseRatMatrix::from_i64_rows(&[vec![2]]);
        assert_eq!(hoffman_polynomial(&twos), Err(MatrixError::NotZeroOne));
    }

    #[test]
    fn ideal_examples() {
        let x6 = IntPolynomial::x_pow_minus_one(6).to_rational();
        let phi3 = cyclotomic(3).to_rational();
        assert_eq!(ideal_canonical(&phi3, &x6).unwrap().generator, phi3);
        let g = ideal_canonical(&RatPolynomial::x_pow(7), &cyclotomic(6).to_rational()).unwrap();
        assert!(g.is_unit());
        assert_eq!(
            ideal_canonical(&phi3, &RatPolynomial::zero()),
            Err(MatrixError::ZeroModulus)
        );
        let s = subfield_representation(7, 3).unwrap();
        let a = ideal_canonical(&s.hoffman, &s.minimal_polynomial).unwrap();
        let b = ideal_canonical(&s.eigenvalue_polynomial, &s.minimal_polynomial).unwrap();
        assert!(a.same_ideal(&b));
        assert_eq!(a.generator, rp(&[2, 1, 1]));
    }

    #[test]
    fn cyclotomic_quotients_of_the_group_ring() {
        for n in 1..=24u64 {
            let modulus = IntPolynomial::x_pow_minus_one(n as usize).to_rational();
            for d in divisors(n) {
                let phi = cyclotomic(d).to_rational();
                assert_eq!(ideal_canonical(&phi, &modulus).unwrap().generator, phi);
                assert_eq!(element_minimal_polynomial(d, &RatPolynomial::x_pow(1)), phi);
            }
        }
    }
}
