use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Arbitrary-precision fraction in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"`, `"-p"` or `"p/q"` with `q != 0`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse("rational", s, "numerator is not an integer"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse("rational", s, "denominator is not an integer"))?;
    if den.is_zero() {
        return Err(Error::parse("rational", s, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn pow(x: &Rational, e: u32) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

/// `x (x-1) ... (x-n+1)`
pub fn falling(x: &Rational, n: u32) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| acc * (x - int(i as i64)))
}

/// `x (x+1) ... (x+n-1)`
pub fn rising(x: &Rational, n: u32) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| acc * (x + int(i as i64)))
}

/// Generalized binomial coefficient with a rational upper argument.
pub fn binomial(x: &Rational, n: u32) -> Rational {
    falling(x, n) / Rational::from_integer(factorial(n))
}
