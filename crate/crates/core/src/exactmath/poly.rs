use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `t^i`.
///
/// The highest stored coefficient is never zero, so the zero polynomial is
/// the empty vector and structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<Rational>;

impl<T: Zero> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

impl<T: Zero + One + Clone> Polynomial<T> {
    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `t^d`
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![T::zero(); d + 1];
        coeffs[d] = T::one();
        Polynomial { coeffs }
    }

    /// `c · t^d`
    pub fn term(c: T, d: usize) -> Self {
        let mut coeffs = vec![T::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    /// Coefficient of `t^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, t: &T) -> T
    where
        T: for<'a> Mul<&'a T, Output = T> + Add<Output = T>,
    {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * t + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self
    where
        T: for<'a> Mul<&'a T, Output = T>,
    {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self
    where
        T: for<'a> Mul<&'a T, Output = T> + Add<Output = T>,
    {
        (0..e).fold(Self::constant(T::one()), |acc, _| &acc * self)
    }

    pub fn map<U: Zero>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl IntPolynomial {
    /// Exact value at an integer point.
    pub fn evaluate_int(&self, t: i64) -> BigInt {
        self.evaluate(&BigInt::from(t))
    }

    pub fn to_rational(&self) -> RatPolynomial {
        self.map(|c| Rational::from_integer(c.clone()))
    }
}

impl<T: Zero + Clone + Add<Output = T>> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[T], i: usize| v.get(i).cloned().unwrap_or_else(T::zero);
        Polynomial::new((0..n).map(|i| get(&self.coeffs, i) + get(&rhs.coeffs, i)).collect())
    }
}

impl<T: Zero + Clone + Add<Output = T>> Add for Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        &self + &rhs
    }
}

impl<T: Zero + Clone + Neg<Output = T>> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial { coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect() }
    }
}

impl<T: Zero + Clone + Add<Output = T> + Neg<Output = T>> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        self + &(-rhs)
    }
}

impl<T> Mul for &Polynomial<T>
where
    T: Zero + Clone + Add<Output = T> + for<'a> Mul<&'a T, Output = T>,
{
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.clone() * b;
                out[i + j] = std::mem::replace(&mut out[i + j], T::zero()) + prod;
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Zero + fmt::Display + PartialOrd + Neg<Output = T> + Clone + One> fmt::Display
    for Polynomial<T>
{
    /// Renders highest degree first, e.g. `t^2 - t + 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < T::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match d {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}t")?,
                _ if unit => write!(f, "t^{d}")?,
                _ => write!(f, "{mag}t^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(ip(&[4, -1, 1]).evaluate_int(-1), BigInt::from(6));
        assert_eq!(IntPolynomial::zero().evaluate_int(17), BigInt::from(0));
        let one_plus_t = ip(&[1, 1]);
        assert_eq!(one_plus_t.pow(2).evaluate_int(-1), BigInt::from(0));
        assert_eq!(one_plus_t.pow(2), ip(&[1, 2, 1]));
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(ip(&[1, 0, 0]).degree(), Some(0));
        assert!(ip(&[0, 0]).is_zero());
        assert_eq!(&ip(&[1, 1]) - &ip(&[1, 1]), IntPolynomial::zero());
    }

    #[test]
    fn display() {
        assert_eq!(ip(&[4, -1, 1]).to_string(), "t^2 - t + 4");
        assert_eq!(ip(&[1, -2, 1]).to_string(), "t^2 - 2t + 1");
        assert_eq!(ip(&[0, 0, -3]).to_string(), "-3t^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_homomorphism(
            p in prop::collection::vec(-20i64..20, 0..6),
            q in prop::collection::vec(-20i64..20, 0..6),
            t in -5i64..5,
        ) {
            let (p, q) = (ip(&p), ip(&q));
            let (pt, qt) = (p.evaluate_int(t), q.evaluate_int(t));
            prop_assert_eq!((&p * &q).evaluate_int(t), &pt * &qt);
            prop_assert_eq!((&p + &q).evaluate_int(t), &pt + &qt);
        }
    }
}
