//! Binary fixed-point reals over `BigInt`: value = mantissa / 2^bits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixed {
    m: BigInt,
    bits: u32,
}

/// Working bits for `digits` decimal digits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 8
}

fn round_shift(x: BigInt, shift: u32) -> BigInt {
    if shift == 0 {
        return x;
    }
    let half = BigInt::one() << (shift - 1);
    (x + half) >> shift
}

impl Fixed {
    pub fn zero(bits: u32) -> Self {
        Fixed { m: BigInt::zero(), bits }
    }

    pub fn from_int(n: i64, bits: u32) -> Self {
        Fixed { m: BigInt::from(n) << bits, bits }
    }

    pub fn from_bigint(n: &BigInt, bits: u32) -> Self {
        Fixed { m: n << bits, bits }
    }

    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        let num = r.numer() << (bits + 1);
        let q = num.div_floor(r.denom());
        Fixed { m: round_shift(q, 1), bits }
    }

    pub fn from_f64(x: f64, bits: u32) -> Self {
        let r = Rational::from_float(x).expect("finite float");
        Fixed::from_rational(&r, bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.m
    }

    /// Re-expresses the value at another precision.
    pub fn with_bits(&self, bits: u32) -> Self {
        let m = match bits.cmp(&self.bits) {
            Ordering::Equal => self.m.clone(),
            Ordering::Greater => &self.m << (bits - self.bits),
            Ordering::Less => round_shift(self.m.clone(), self.bits - bits),
        };
        Fixed { m, bits }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.m.is_negative()
    }

    pub fn abs(&self) -> Self {
        Fixed { m: self.m.abs(), bits: self.bits }
    }

    pub fn mul_int(&self, n: i64) -> Self {
        Fixed { m: &self.m * n, bits: self.bits }
    }

    pub fn mul_bigint(&self, n: &BigInt) -> Self {
        Fixed { m: &self.m * n, bits: self.bits }
    }

    pub fn div_int(&self, n: i64) -> Self {
        self.div_bigint(&BigInt::from(n))
    }

    pub fn div_bigint(&self, n: &BigInt) -> Self {
        let (q, r) = self.m.div_mod_floor(n);
        // round half away from the floor
        let twice = r * 2;
        let up = if n.is_positive() { twice >= *n } else { twice <= *n };
        Fixed { m: if up { q + 1 } else { q }, bits: self.bits }
    }

    pub fn div(&self, other: &Fixed) -> Self {
        assert_eq!(self.bits, other.bits, "precision mismatch");
        let num = &self.m << self.bits;
        Fixed { m: num, bits: self.bits }.div_bigint(&other.m)
    }

    pub fn recip(&self) -> Self {
        Fixed::from_int(1, self.bits).div(self)
    }

    /// Multiplies by `2^k` (k may be negative).
    pub fn shl(&self, k: i32) -> Self {
        let m = if k >= 0 { &self.m << k as u32 } else { round_shift(self.m.clone(), (-k) as u32) };
        Fixed { m, bits: self.bits }
    }

    pub fn powi(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Fixed::from_int(1, self.bits);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Newton square root; panics on negative input.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative number");
        let scaled = &self.m << self.bits;
        Fixed { m: scaled.sqrt(), bits: self.bits }
    }

    /// Integer part, rounded toward −∞.
    pub fn floor(&self) -> BigInt {
        self.m.div_floor(&(BigInt::one() << self.bits))
    }

    /// Keeps the top 60 bits of the mantissa, so tiny values stay accurate.
    pub fn to_f64(&self) -> f64 {
        let shift = self.m.bits().saturating_sub(60);
        let m = (&self.m >> shift).to_f64().unwrap_or(f64::NAN);
        let e = shift as i64 - self.bits as i64;
        // split the scaling so neither factor underflows early
        let half = (e / 2) as i32;
        m * 2f64.powi(half) * 2f64.powi(e as i32 - half)
    }

    /// Exact rational value of the mantissa.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.m.clone(), BigInt::one() << self.bits)
    }

    /// Decimal string with exactly `digits` digits after the point,
    /// correctly rounded from the stored value.
    pub fn to_decimal(&self, digits: u32) -> String {
        let ten = BigInt::from(10).pow(digits);
        let scaled = round_shift(self.m.abs() * ten.clone(), self.bits);
        let (int, frac) = scaled.div_rem(&ten);
        let sign = if self.m.sign() == Sign::Minus && !scaled.is_zero() { "-" } else { "" };
        if digits == 0 {
            return format!("{sign}{int}");
        }
        format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits as usize)
    }

    /// `|self − other| ≤ 10^{−digits}`.
    pub fn close_to(&self, other: &Fixed, digits: u32) -> bool {
        let diff = (self - other).abs();
        let tol = Fixed::from_rational(&Rational::new(BigInt::one(), BigInt::from(10).pow(digits)), self.bits);
        diff.m <= tol.m
    }
}

impl PartialOrd for Fixed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fixed {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.bits, other.bits, "precision mismatch");
        self.m.cmp(&other.m)
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.bits as f64 / std::f64::consts::LOG2_10).floor() as u32;
        write!(f, "{}", self.to_decimal(digits.saturating_sub(2)))
    }
}

impl Add for &Fixed {
    type Output = Fixed;
    fn add(self, o: &Fixed) -> Fixed {
        assert_eq!(self.bits, o.bits, "precision mismatch");
        Fixed { m: &self.m + &o.m, bits: self.bits }
    }
}

impl Sub for &Fixed {
    type Output = Fixed;
    fn sub(self, o: &Fixed) -> Fixed {
        assert_eq!(self.bits, o.bits, "precision mismatch");
        Fixed { m: &self.m - &o.m, bits: self.bits }
    }
}

impl Mul for &Fixed {
    type Output = Fixed;
    fn mul(self, o: &Fixed) -> Fixed {
        assert_eq!(self.bits, o.bits, "precision mismatch");
        Fixed { m: round_shift(&self.m * &o.m, self.bits), bits: self.bits }
    }
}

impl Neg for &Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed { m: -&self.m, bits: self.bits }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Fixed {
            type Output = Fixed;
            fn $f(self, o: Fixed) -> Fixed {
                (&self).$f(&o)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        -&self
    }
}
