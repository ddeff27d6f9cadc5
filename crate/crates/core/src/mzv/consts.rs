//! π, ln 2, exp and ln at fixed-point precision.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::real::Fixed;

const GUARD_BITS: u32 = 32;

/// `atan(1/n)` by its Taylor series.
fn atan_inv(n: i64, bits: u32) -> Fixed {
    let n2 = BigInt::from(n * n);
    let mut power = Fixed::from_int(1, bits).div_int(n);
    let mut sum = power.clone();
    let mut k: i64 = 1;
    loop {
        power = power.div_bigint(&n2);
        if power.is_zero() {
            break;
        }
        let t = power.div_int(2 * k + 1);
        sum = if k % 2 == 1 { &sum - &t } else { &sum + &t };
        k += 1;
    }
    sum
}

/// `atanh(z)` for `|z| ≤ 1/3`.
fn atanh_small(z: &Fixed) -> Fixed {
    let z2 = z * z;
    let mut power = z.clone();
    let mut sum = z.clone();
    let mut k: i64 = 1;
    loop {
        power = &power * &z2;
        let t = power.div_int(2 * k + 1);
        if t.is_zero() {
            break;
        }
        sum = &sum + &t;
        k += 1;
    }
    sum
}

/// Machin: `π = 16 atan(1/5) − 4 atan(1/239)`.
pub fn pi(bits: u32) -> Fixed {
    let w = bits + GUARD_BITS;
    (&atan_inv(5, w).mul_int(16) - &atan_inv(239, w).mul_int(4)).with_bits(bits)
}

/// `ln 2 = 2 atanh(1/3)`.
pub fn ln2(bits: u32) -> Fixed {
    let w = bits + GUARD_BITS;
    atanh_small(&Fixed::from_int(1, w).div_int(3)).mul_int(2).with_bits(bits)
}

pub fn exp(x: &Fixed) -> Fixed {
    let bits = x.bits();
    let w = bits + GUARD_BITS;
    let x = x.with_bits(w);
    let l2 = ln2(w);
    let k = x.div(&l2).shl(1).floor();
    let k = (k + 1) / 2; // nearest integer
    let r = &x - &l2.mul_bigint(&k);
    const HALVINGS: i32 = 12;
    let r = r.shl(-HALVINGS);
    let mut term = Fixed::from_int(1, w);
    let mut sum = term.clone();
    let mut j: i64 = 1;
    loop {
        term = (&term * &r).div_int(j);
        if term.is_zero() {
            break;
        }
        sum = &sum + &term;
        j += 1;
    }
    for _ in 0..HALVINGS {
        sum = &sum * &sum;
    }
    let k = k.to_i32().expect("exponent fits");
    sum.shl(k).with_bits(bits)
}

/// Natural logarithm; panics for `x ≤ 0`.
pub fn ln(x: &Fixed) -> Fixed {
    assert!(!x.is_negative() && !x.is_zero(), "logarithm of a non-positive number");
    let bits = x.bits();
    let w = bits + GUARD_BITS;
    let x = x.with_bits(w);
    // x = 2^k · y with y ∈ [1, 2)
    let mant_bits = x.mantissa().bits() as i64;
    let k = mant_bits - 1 - w as i64;
    let y = x.shl(-(k as i32));
    let one = Fixed::from_int(1, w);
    let z = (&y - &one).div(&(&y + &one));
    let lny = atanh_small(&z).mul_int(2);
    (&lny + &ln2(w).mul_int(k)).with_bits(bits)
}

/// `x^a = exp(a ln x)` for `x > 0`.
pub fn powf(x: &Fixed, a: &Fixed) -> Fixed {
    if a.is_zero() {
        return Fixed::from_int(1, x.bits());
    }
    exp(&(a * &ln(x)))
}
