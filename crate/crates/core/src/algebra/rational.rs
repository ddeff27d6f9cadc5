use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn factorial_q(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

/// Generalized binomial coefficient C(n, k) for any integer `n`.
pub fn binomial(n: i64, k: u32) -> Rational {
    let mut num = BigInt::one();
    for i in 0..k as i64 {
        num *= n - i;
    }
    Rational::new(num, factorial(k))
}

/// Serializes as `"p/q"` with `q > 0` and `gcd(p, q) = 1`; integers keep `/1`.
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_pq(s: &str) -> Result<Rational, AlgebraError> {
    let bad = || AlgebraError::BadRational(s.to_string());
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

#[allow(dead_code)]
pub(crate) fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

#[allow(dead_code)]
pub(crate) fn abs_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.abs().gcd(&b.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_format_is_reduced() {
        assert_eq!(to_pq(&rat(6, -4)), "-3/2");
        assert_eq!(to_pq(&int(3)), "3/1");
        assert_eq!(to_pq(&int(0)), "0/1");
        assert_eq!(parse_pq("-10/4").unwrap(), rat(-5, 2));
        assert_eq!(parse_pq("7").unwrap(), int(7));
        assert!(parse_pq("1/0").is_err());
        assert!(parse_pq("x").is_err());
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(-1, 3), int(-1));
        assert_eq!(binomial(-2, 2), int(3));
        assert_eq!(binomial(2, 3), int(0));
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
