use super::{element_minimal_polynomial, CirculantMatrix, MatrixError, ToDense};
use crate::polyring::RatPolynomial;

/// `W_n + W_n^(n-1)`, the adjacency matrix of the `n`-cycle.
pub fn symmetric_representation(n: u64) -> Result<CirculantMatrix, MatrixError> {
    if n < 3 {
        return Err(MatrixError::OrderTooSmall { n, min: 3 });
    }
    CirculantMatrix::from_exponents(n as usize, &[1, n - 1])
}

/// Minimal polynomial of `zeta_n + zeta_n^(-1)`.
pub fn delta_minimal_polynomial(n: u64) -> RatPolynomial {
    let mut g = RatPolynomial::x_pow(1);
    if n > 1 {
        g = &g + &RatPolynomial::x_pow((n - 1) as usize);
    }
    element_minimal_polynomial(n, &g)
}

/// Characteristic polynomial of the path on `m` vertices.
pub fn path_characteristic_polynomial(m: usize) -> RatPolynomial {
    let x = RatPolynomial::x_pow(1);
    let (mut prev, mut cur) = (RatPolynomial::one(), x.clone());
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let next = &(&x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Whether the path on `n/2 - 1` vertices has the same eigenvalue set as the
/// `n`-cycle once `2` and `-2` are removed.
pub fn path_cycle_spectrum_check(n: u64) -> Result<bool, MatrixError> {
    if n % 2 == 1 {
        return Err(MatrixError::OddOrder(n));
    }
    if n < 4 {
        return Err(MatrixError::OrderTooSmall { n, min: 4 });
    }
    let path = path_characteristic_polynomial((n / 2 - 1) as usize);
    let cycle = symmetric_representation(n)?.dense().characteristic_polynomial()?;
    let ends = RatPolynomial::from_i64s(&[-4, 0, 1]);
    let inner = cycle.divide_exact(&ends)?;
    Ok(path.squarefree_part()? == inner.squarefree_part()?)
}

/// Smallest order of a circulant matrix representing `Q(zeta_n)`.
pub fn smallest_circulant_order(n: u64) -> u64 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixrep::minimal_polynomial;
    use crate::numtheory::totient;

    #[test]
    fn delta_factors() {
        assert_eq!(delta_minimal_polynomial(5), RatPolynomial::from_i64s(&[-1, 1, 1]));
        assert_eq!(delta_minimal_polynomial(6), RatPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(delta_minimal_polynomial(12), RatPolynomial::from_i64s(&[-3, 0, 1]));
        for n in [5u64, 6, 7, 8, 12, 13, 17] {
            let sym = symmetric_representation(n).unwrap();
            assert!(sym.dense().is_symmetric());
            let mp = minimal_polynomial(&sym.dense()).unwrap();
            let delta = delta_minimal_polynomial(n);
            assert_eq!(delta.degree(), Some(totient(n) as usize / 2));
            assert!(mp.rem(&delta).unwrap().is_zero(), "n = {n}");
        }
        assert_eq!(
            symmetric_representation(2),
            Err(MatrixError::OrderTooSmall { n: 2, min: 3 })
        );
    }

    #[test]
    fn path_polynomials() {
        assert_eq!(path_characteristic_polynomial(1), RatPolynomial::x_pow(1));
        assert_eq!(path_characteristic_polynomial(2), RatPolynomial::from_i64s(&[-1, 0, 1]));
        for m in 1..=8usize {
            let rows: Vec<Vec<i64>> = (0..m)
                .map(|i| (0..m).map(|j| i64::from(i.abs_diff(j) == 1)).collect())
                .collect();
            let dense = crate::matrixrep::DenseRatMatrix::from_i64_rows(&rows);
            assert_eq!(
                dense.characteristic_polynomial().unwrap(),
                path_characteristic_polynomial(m)
            );
        }
    }

    #[test]
    fn path_cycle() {
        for n in (4..=40).step_by(2) {
            assert!(path_cycle_spectrum_check(n).unwrap(), "n = {n}");
        }
        assert_eq!(path_cycle_spectrum_check(7), Err(MatrixError::OddOrder(7)));
        assert_eq!(
            path_cycle_spectrum_check(2),
            Err(MatrixError::OrderTooSmall { n: 2, min: 4 })
        );
    }

    #[test]
    fn smallest_orders() {
        assert_eq!(smallest_circulant_order(6), 3);
        assert_eq!(smallest_circulant_order(12), 12);
        assert_eq!(smallest_circulant_order(5), 5);
        assert_eq!(smallest_circulant_order(2), 1);
    }
}
