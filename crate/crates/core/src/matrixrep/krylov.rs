use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{CirculantMatrix, DenseRatMatrix, MatrixError, ToDense};
use crate::numtheory::divisors;
use crate::polyring::{cyclotomic, RatPolynomial};

struct Row {
    vector: Vec<BigInt>,
    pivot: usize,
    combo: Vec<BigInt>,
}

/// Incremental fraction-free elimination that reports the first vector
/// lying in the span of its predecessors.
#[derive(Default)]
struct DependenceFinder {
    rows: Vec<Row>,
    scales: Vec<BigRational>,
}

fn content(items: impl Iterator<Item = BigInt>) -> BigInt {
    items.fold(BigInt::zero(), |g, x| g.gcd(&x))
}

impl DependenceFinder {
    /// Adds `v_t`. Returns `c` with `sum_{i <= t} c_i v_i = 0` and `c_t != 0`
    /// when `v_t` depends on the earlier vectors.
    fn push(&mut self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        let t = self.scales.len();
        let lcm = v.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        let mut w: Vec<BigInt> = v.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
        let g = content(w.iter().cloned());
        if g.is_zero() {
            self.scales.push(BigRational::one());
            let mut c = vec![BigRational::zero(); t + 1];
            c[t] = BigRational::one();
            return Some(c);
        }
        w.iter_mut().for_each(|x| *x /= &g);
        self.scales.push(BigRational::new(lcm, g));

        let mut combo = vec![BigInt::zero(); t + 1];
        combo[t] = BigInt::one();
        for row in &self.rows {
            let b = &w[row.pivot];
            if b.is_zero() {
                continue;
            }
            let a = &row.vector[row.pivot];
            let g = a.gcd(b);
            let (fa, fb) = (a / &g, b / &g);
            for (x, y) in w.iter_mut().zip(&row.vector) {
                *x = &*x * &fa - y * &fb;
            }
            for (i, x) in combo.iter_mut().enumerate() {
                let y = row.combo.get(i).cloned().unwrap_or_default();
                *x = &*x * &fa - y * &fb;
            }
            let g = content(w.iter().chain(combo.iter()).cloned());
            if !g.is_one() && !g.is_zero() {
                w.iter_mut().for_each(|x| *x /= &g);
                combo.iter_mut().for_each(|x| *x /= &g);
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                self.rows.push(Row {
                    vector: w,
                    pivot,
                    combo,
                });
                None
            }
            None => Some(
                combo
                    .into_iter()
                    .zip(&self.scales)
                    .map(|(c, s)| BigRational::from_integer(c) * s)
                    .collect(),
            ),
        }
    }
}

fn monic_from(coeffs: Vec<BigRational>) -> RatPolynomial {
    RatPolynomial::new(coeffs).monic()
}

/// Monic generator of the annihilating ideal of `m`, from the first linear
/// dependence among `I, M, M^2, ...`.
pub fn minimal_polynomial(m: &DenseRatMatrix) -> Result<RatPolynomial, MatrixError> {
    let n = m.require_square()?;
    let mut finder = DependenceFinder::default();
    let mut power = DenseRatMatrix::identity(n);
    loop {
        if let Some(c) = finder.push(power.entries()) {
            return Ok(monic_from(c));
        }
        power = &power * m;
    }
}

/// Minimal polynomial over `Q` of `g(zeta_n)`, from powers of `g` reduced
/// modulo `Phi_n`.
pub fn element_minimal_polynomial(n: u64, g: &RatPolynomial) -> RatPolynomial {
    let phi = cyclotomic(n).to_rational();
    let width = phi.degree().expect("cyclotomic polynomials are nonzero");
    let g = g.rem(&phi).expect("Phi_n is nonzero");
    let mut finder = DependenceFinder::default();
    let mut power = RatPolynomial::one();
    loop {
        let v: Vec<BigRational> = (0..width).map(|i| power.coeff(i)).collect();
        if let Some(c) = finder.push(&v) {
            return monic_from(c);
        }
        power = (&power * &g).rem(&phi).expect("Phi_n is nonzero");
    }
}

/// Square-free part of the product over `d | n` of the minimal polynomials
/// of `g(zeta_d)`.
pub fn circulant_minimal_polynomial(c: &CirculantMatrix) -> RatPolynomial {
    let g = c.representer().to_rational();
    let product = divisors(c.order() as u64)
        .into_iter()
        .fold(RatPolynomial::one(), |acc, d| &acc * &element_minimal_polynomial(d, &g));
    product.squarefree_part().expect("product of monic factors is nonzero")
}

/// Both routes to the circulant's minimal polynomial, required to agree.
pub fn circulant_minimal_polynomial_checked(c: &CirculantMatrix) -> Result<RatPolynomial, MatrixError> {
    let by_divisors = circulant_minimal_polynomial(c);
    let by_krylov = minimal_polynomial(&c.dense())?;
    if by_divisors == by_krylov {
        Ok(by_krylov)
    } else {
        Err(MatrixError::DualPathMismatch)
    }
}
