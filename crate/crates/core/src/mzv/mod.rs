//! High-precision numerics used as an independent oracle: alternating MZVs,
//! ζ, Γ, ψ and `₂F₁` at −1.

pub mod accel;
pub mod amzv;
pub mod consts;
pub mod gamma;
pub mod hyper;
pub mod real;
pub mod zeta;

use std::fmt;

use thiserror::Error;

use crate::algebra::Rational;

pub use amzv::{bracket_amzv, eval_amzv, MZVIndex};
pub use real::{bits_for_digits, Fixed};

/// Largest accepted digit request.
pub const MAX_DIGITS: u32 = 2000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MzvError {
    #[error("the series diverges: last entry (ε, k) = (1, 1)")]
    Divergent,
    #[error("malformed index {0:?}")]
    BadIndex(String),
    #[error("unsupported index shape: {0}")]
    Unsupported(String),
    #[error("acceleration did not settle: {0}")]
    Stalled(String),
    #[error("pole at {0}")]
    Pole(f64),
    #[error("{0} digits exceeds the configured maximum")]
    TooManyDigits(u32),
}

/// `g = 15 + ⌈digits/4⌉`.
pub fn guard_digits(digits: u32) -> u32 {
    15 + digits.div_ceil(4)
}

/// A value carried at `digits + guard` decimal digits, advertised to
/// `digits`.
#[derive(Clone, Debug, PartialEq)]
pub struct HighPrecisionReal {
    value: Fixed,
    digits: u32,
    guard: u32,
}

impl HighPrecisionReal {
    pub fn new(value: Fixed, digits: u32, guard: u32) -> Self {
        HighPrecisionReal { value, digits, guard }
    }

    pub fn value(&self) -> &Fixed {
        &self.value
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

impl fmt::Display for HighPrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value.to_decimal(self.digits))
    }
}

fn working_bits(digits: u32) -> (u32, u32) {
    let guard = guard_digits(digits);
    (bits_for_digits(digits + guard), guard)
}

pub fn eval_zeta(n: u32, digits: u32) -> Result<HighPrecisionReal, MzvError> {
    if n < 2 {
        return Err(MzvError::Pole(n as f64));
    }
    let (bits, guard) = working_bits(digits);
    Ok(HighPrecisionReal::new(zeta::zeta_int(n, bits, digits + guard), digits, guard))
}

pub fn eval_gamma(z: &Rational, digits: u32) -> Result<HighPrecisionReal, MzvError> {
    let (bits, guard) = working_bits(digits);
    let v = gamma::gamma(&Fixed::from_rational(z, bits), digits + guard)?;
    Ok(HighPrecisionReal::new(v, digits, guard))
}

pub fn eval_digamma(z: &Rational, digits: u32) -> Result<HighPrecisionReal, MzvError> {
    let (bits, guard) = working_bits(digits);
    let v = gamma::digamma(&Fixed::from_rational(z, bits), digits + guard)?;
    Ok(HighPrecisionReal::new(v, digits, guard))
}

pub fn eval_2f1_at_minus1(a: &Rational, b: &Rational, c: &Rational, digits: u32) -> Result<HighPrecisionReal, MzvError> {
    let (bits, guard) = working_bits(digits);
    let f = |r: &Rational| Fixed::from_rational(r, bits);
    let v = hyper::hyp2f1_at_minus1(&f(a), &f(b), &f(c))?;
    Ok(HighPrecisionReal::new(v, digits, guard))
}

pub fn euler_gamma(digits: u32) -> HighPrecisionReal {
    let (bits, guard) = working_bits(digits);
    HighPrecisionReal::new(zeta::euler_gamma(bits, digits + guard), digits, guard)
}

pub fn pi(digits: u32) -> HighPrecisionReal {
    let (bits, guard) = working_bits(digits);
    HighPrecisionReal::new(consts::pi(bits), digits, guard)
}

pub fn ln2(digits: u32) -> HighPrecisionReal {
    let (bits, guard) = working_bits(digits);
    HighPrecisionReal::new(consts::ln2(bits), digits, guard)
}
