use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{PolyError, RatPolynomial};

/// Dense polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The vector never ends in a zero,
/// so the zero polynomial is the empty vector and [`IntPolynomial::degree`]
/// returns `None` for it.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x^k`.
    pub fn x_pow(k: usize) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut p = Self::x_pow(n);
        p.coeffs[0] -= 1;
        Self::new(p.coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the end).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Largest absolute coefficient; zero for the zero polynomial.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `f(x^t)`.
    ///
    /// # Panics
    ///
    /// Panics if `t == 0`.
    pub fn substitute_power(&self, t: usize) -> Self {
        assert!(t >= 1, "substitution exponent must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * t + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * t] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial::from(self)
    }

    /// Quotient and remainder when the divisor's leading coefficient is a unit
    /// (`±1`), so the division stays inside `Z[x]`.
    pub(crate) fn div_rem_unit_leading(&self, divisor: &Self) -> Option<(Self, Self)> {
        let lead = divisor.leading()?;
        if !(lead.is_one() || (-lead).is_one()) {
            return None;
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient `self / divisor` in `Z[x]`.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if let Some((q, r)) = self.div_rem_unit_leading(divisor) {
            return if r.is_zero() {
                Ok(q)
            } else {
                Err(PolyError::NotDivisible {
                    remainder_degree: r.degree().unwrap_or(0),
                })
            };
        }
        let (q, r) = self.to_rational().div_rem(&divisor.to_rational())?;
        if let Some(d) = r.degree() {
            return Err(PolyError::NotDivisible { remainder_degree: d });
        }
        q.to_integer().ok_or(PolyError::NonIntegralQuotient)
    }

    /// Whether `divisor` divides `self` over `Q[x]`.
    pub fn divisible_by(&self, divisor: &Self) -> Result<bool, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if let Some((_, r)) = self.div_rem_unit_leading(divisor) {
            return Ok(r.is_zero());
        }
        let (_, r) = self.to_rational().div_rem(&divisor.to_rational())?;
        Ok(r.is_zero())
    }

    /// Content (gcd of coefficients), non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Ascending coefficients as decimal strings, e.g. `["1","-1","1"]`.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, PolyError> {
        items
            .iter()
            .map(|s| {
                s.as_ref()
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| PolyError::Parse(s.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        Self::from_decimal_strings(&items).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn write_descending<T, F>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[T],
    is_zero: impl Fn(&T) -> bool,
    split: F,
) -> fmt::Result
where
    F: Fn(&T) -> (bool, String, bool),
{
    // split(c) -> (negative, |c| rendered, |c| == 1)
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if is_zero(c) {
            continue;
        }
        let (neg, abs, unit) = split(c);
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        match (i, unit) {
            (0, _) => write!(f, "{abs}")?,
            (_, true) => write!(f, "{mono}")?,
            (_, false) => write!(f, "{abs}*{mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_descending(
            f,
            &self.coeffs,
            |c| c.is_zero(),
            |c| {
                let a = c.abs();
                (c.is_negative(), a.to_string(), a.is_one())
            },
        )
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn normalization_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(IntPolynomial::x_pow_minus_one(3), p(&[-1, 0, 0, 1]));
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        let f = p(&[3, 0, -2]);
        assert_eq!(&f + &IntPolynomial::zero(), f);
        // (x^2 - x + 1)(x^3 - x - 1) = x^5 - x^4 - 1
        assert_eq!(&p(&[1, -1, 1]) * &p(&[-1, -1, 0, 1]), p(&[-1, 0, 0, 0, -1, 1]));
        assert_eq!(&f - &f, IntPolynomial::zero());
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(p(&[-1, 0, 1]).divide_exact(&p(&[-1, 1])), Ok(p(&[1, 1])));
        // x^6 - 1 = (x^2 - x + 1)(x^4 + x^3 - x - 1)
        assert_eq!(
            IntPolynomial::x_pow_minus_one(6).divide_exact(&p(&[1, -1, 1])),
            Ok(p(&[-1, -1, 0, 1, 1]))
        );
        assert_eq!(
            p(&[1, 0, 1]).divide_exact(&p(&[1, 1])),
            Err(PolyError::NotDivisible { remainder_degree: 0 })
        );
        assert_eq!(
            p(&[1, 1]).divide_exact(&IntPolynomial::zero()),
            Err(PolyError::DivisionByZero)
        );
        assert_eq!(p(&[0, 4]).divide_exact(&p(&[0, 2])), Ok(p(&[2])));
        assert_eq!(
            p(&[0, 2]).divide_exact(&p(&[0, 4])),
            Err(PolyError::NonIntegralQuotient)
        );
    }

    #[test]
    fn divisibility_examples() {
        let f = p(&[-1, 0, 0, 0, -1, 1]);
        assert_eq!(f.divisible_by(&p(&[1, -1, 1])), Ok(true));
        assert_eq!(f.divisible_by(&f), Ok(true));
        assert_eq!(f.divisible_by(&p(&[1, 1, 1])), Ok(false));
        assert_eq!(f.divisible_by(&IntPolynomial::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn substitution_examples() {
        let phi6 = p(&[1, -1, 1]);
        assert_eq!(phi6.substitute_power(1), phi6);
        assert_eq!(phi6.substitute_power(2), p(&[1, 0, -1, 0, 1]));
        assert_eq!(p(&[-1, 1]).substitute_power(3), p(&[-1, 0, 0, 1]));
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[1, -1, 1]).to_string(), "x^2 - x + 1");
        assert_eq!(p(&[0, 0, -3, 1]).to_string(), "x^3 - 3*x^2");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_form() {
        let phi6 = p(&[1, -1, 1]);
        assert_eq!(serde_json::to_string(&phi6).unwrap(), r#"["1","-1","1"]"#);
        let big: IntPolynomial = serde_json::from_str(r#"["123456789012345678901234567890","0","-1"]"#).unwrap();
        assert_eq!(big.degree(), Some(2));
        assert!(serde_json::from_str::<IntPolynomial>(r#"["1","x"]"#).is_err());
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-20i64..20, 0..8).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn product_divides_back(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.divide_exact(&b), Ok(a));
        }

        #[test]
        fn json_round_trip(a in small_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<IntPolynomial>(&s).unwrap(), a);
        }

        #[test]
        fn substitution_is_multiplicative(a in small_poly(), b in small_poly(), t in 1usize..4) {
            prop_assert_eq!((&a * &b).substitute_power(t), &a.substitute_power(t) * &b.substitute_power(t));
        }
    }
}
