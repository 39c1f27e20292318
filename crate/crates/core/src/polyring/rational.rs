use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::int::write_descending;
use super::{IntPolynomial, PolyError};

/// Dense polynomial over `Q`, same normalization as [`IntPolynomial`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, PolyError> {
    let err = || PolyError::Parse(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| err())?)),
    }
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`.
    pub fn linear_root(root: BigRational) -> Self {
        Self::new(vec![-root, BigRational::one()])
    }

    pub fn x_pow(k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Divides through by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => Self::new(self.coeffs.iter().map(|c| c / lead).collect()),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// `self(x * factor)`.
    pub fn stretch(&self, factor: &BigRational) -> Self {
        let mut power = BigRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &power);
            power *= factor;
        }
        Self::new(coeffs)
    }

    /// Converts to `Z[x]` when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let lead = divisor.leading().ok_or(PolyError::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = lead.recip();
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem(divisor)?;
        match r.degree() {
            None => Ok(q),
            Some(d) => Err(PolyError::NotDivisible { remainder_degree: d }),
        }
    }

    /// Monic gcd by the Euclidean algorithm, normalizing every remainder.
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero").monic();
            a = b;
            b = r;
        }
        a
    }

    /// Monic `f / gcd(f, f')`: the product of the distinct monic irreducible
    /// factors of `f`.
    pub fn squarefree_part(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.monic().divide_exact(&g)?.monic())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, PolyError> {
        items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

impl From<&IntPolynomial> for RatPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        RatPolynomial::new(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl From<IntPolynomial> for RatPolynomial {
    fn from(p: IntPolynomial) -> Self {
        RatPolynomial::from(&p)
    }
}

impl Serialize for RatPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        Self::from_strings(&items).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_descending(
            f,
            &self.coeffs,
            |c| c.is_zero(),
            |c| {
                let a = c.abs();
                let s = if a.denom().is_one() {
                    format_rational(&a)
                } else {
                    format!("({})", format_rational(&a))
                };
                (c.is_negative(), s, a.is_one())
            },
        )
    }
}

impl fmt::Debug for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPolynomial({self})")
    }
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;

    fn add(self, rhs: &RatPolynomial) -> RatPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        RatPolynomial::new(coeffs)
    }
}

impl Neg for &RatPolynomial {
    type Output = RatPolynomial;

    fn neg(self) -> RatPolynomial {
        RatPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;

    fn sub(self, rhs: &RatPolynomial) -> RatPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &RatPolynomial {
    type Output = RatPolynomial;

    fn mul(self, rhs: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RatPolynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPolynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPolynomial {
            type Output = RatPolynomial;
            fn $m(self, rhs: RatPolynomial) -> RatPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatPolynomial> for RatPolynomial {
            type Output = RatPolynomial;
            fn $m(self, rhs: &RatPolynomial) -> RatPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(c: &[i64]) -> RatPolynomial {
        RatPolynomial::from_i64s(c)
    }

    #[test]
    fn squarefree_examples() {
        // (x - 1)^2
        assert_eq!(q(&[1, -2, 1]).squarefree_part(), Ok(q(&[-1, 1])));
        assert_eq!(q(&[1, -1, 1]).squarefree_part(), Ok(q(&[1, -1, 1])));
        let a = q(&[-2, 1]);
        let b = q(&[2, 1, 1]);
        let f = &(&a * &b) * &b;
        assert_eq!(f.squarefree_part(), Ok(&a * &b));
        // (x-2)(x^2+x+2) = x^3 - x^2 - 4
        assert_eq!(&a * &b, q(&[-4, 0, -1, 1]));
        assert_eq!(RatPolynomial::zero().squarefree_part(), Err(PolyError::ZeroPolynomial));
        // non-monic input still yields a monic part
        assert_eq!(q(&[3, -6, 3]).squarefree_part(), Ok(q(&[-1, 1])));
    }

    #[test]
    fn gcd_is_monic_and_canonical() {
        let g = q(&[1, 1, 1]);
        let a = &g * &q(&[5, 2]);
        let b = &g * &q(&[-1, 0, 7]);
        assert_eq!(a.gcd(&b), g);
        assert_eq!(RatPolynomial::zero().gcd(&b), b.monic());
        assert_eq!(q(&[0, 7]).gcd(&q(&[1, 0, 1])), RatPolynomial::one());
    }

    #[test]
    fn text_forms() {
        let h = RatPolynomial::new(vec![rat(1), BigRational::new(1.into(), 2.into())]);
        assert_eq!(h.to_strings(), vec!["1", "1/2"]);
        assert_eq!(h.to_string(), "(1/2)*x + 1");
        assert_eq!(RatPolynomial::from_strings(&["1", "1/2"]).unwrap(), h);
        assert!(RatPolynomial::from_strings(&["1/0"]).is_err());
    }

    #[test]
    fn stretch_rescales_roots() {
        // p(x) = x - 6, p(3x) = 3x - 6
        assert_eq!(q(&[-6, 1]).stretch(&rat(3)), q(&[-6, 3]));
    }

    fn small() -> impl Strategy<Value = RatPolynomial> {
        prop::collection::vec(-9i64..9, 0..6).prop_map(|c| RatPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in small(), b in small()) {
            prop_assume!(!b.is_zero());
            let (quo, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&quo * &b) + &r, a);
            prop_assert!(r.degree() < b.degree() || r.is_zero());
        }

        #[test]
        fn gcd_divides_both(a in small(), b in small()) {
            let g = a.gcd(&b);
            if !g.is_zero() {
                prop_assert!(g.is_monic());
                prop_assert!(a.rem(&g).unwrap().is_zero());
                prop_assert!(b.rem(&g).unwrap().is_zero());
            }
        }
    }
}
