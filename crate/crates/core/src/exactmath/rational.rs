use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number. `BigRational` keeps itself reduced with a positive
/// denominator, which is what flat deduplication relies on.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    Empty,
    BadInteger(String),
    ZeroDenominator,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRationalError::Empty => write!(f, "empty rational literal"),
            ParseRationalError::BadInteger(s) => write!(f, "invalid integer `{s}`"),
            ParseRationalError::ZeroDenominator => write!(f, "denominator is zero"),
        }
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let int = |part: &str| -> Result<BigInt, ParseRationalError> {
        part.trim()
            .parse::<BigInt>()
            .map_err(|_| ParseRationalError::BadInteger(part.to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(ParseRationalError::ZeroDenominator);
            }
            Ok(Rational::new(int(n)?, d))
        }
    }
}

/// Inverse of [`parse_rational`]: `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4").unwrap(), Rational::new(3.into(), 2.into()));
        assert_eq!(parse_rational(" -3 ").unwrap(), Rational::from_integer((-3).into()));
        assert_eq!(parse_rational("2/-4").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("1/0"), Err(ParseRationalError::ZeroDenominator));
        assert!(matches!(parse_rational("x/2"), Err(ParseRationalError::BadInteger(_))));
        assert_eq!(parse_rational(""), Err(ParseRationalError::Empty));
        assert_eq!(format_rational(&parse_rational("-10/4").unwrap()), "-5/2");
        assert_eq!(format_rational(&parse_rational("8/4").unwrap()), "2");
    }
}
