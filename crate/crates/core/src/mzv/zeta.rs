//! Riemann ζ at integers and Euler's constant.

use num_bigint::BigInt;

use super::accel::{alternating_sum, terms_for_digits};
use super::real::Fixed;

/// `ζ(n)` for `n ≥ 2` through the alternating η series.
pub fn zeta_int(n: u32, bits: u32, digits: u32) -> Fixed {
    assert!(n >= 2, "ζ(n) needs n ≥ 2");
    let one = Fixed::from_int(1, bits);
    // terms beyond k ≈ 2^{bits/n} are negligible; direct summation is then cheaper
    let eta = alternating_sum(terms_for_digits(digits), |k| {
        one.div_bigint(&BigInt::from(k as u64 + 1).pow(n))
    });
    // ζ(n) = η(n)/(1 − 2^{1−n})
    let factor = &one - &one.shl(1 - n as i32);
    eta.div(&factor)
}

/// `ζ(n) − 1 = Σ_{j≥2} j^{−n}` summed directly; efficient for large `n`.
fn zeta_minus_one_direct(n: u32, bits: u32) -> Option<Fixed> {
    let one = Fixed::from_int(1, bits);
    let mut acc = Fixed::zero(bits);
    for j in 2u64.. {
        let t = one.div_bigint(&BigInt::from(j).pow(n));
        if t.is_zero() {
            return Some(acc);
        }
        acc = &acc + &t;
        if j > 64 {
            return None;
        }
    }
    unreachable!()
}

/// Euler's constant `γ = 1 − Σ_{k≥2} (ζ(k) − 1)/k`.
pub fn euler_gamma(bits: u32, digits: u32) -> Fixed {
    let one = Fixed::from_int(1, bits);
    let mut acc = one.clone();
    for k in 2u32.. {
        let zm1 = zeta_minus_one_direct(k, bits).unwrap_or_else(|| &zeta_int(k, bits, digits) - &one);
        if zm1.is_zero() {
            break;
        }
        acc = &acc - &zm1.div_int(k as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mzv::consts::pi;
    use crate::mzv::real::bits_for_digits;

    #[test]
    fn even_values_match_pi_powers() {
        let b = bits_for_digits(45);
        let p = pi(b);
        let p2 = &p * &p;
        assert!(zeta_int(2, b, 40).close_to(&p2.div_int(6), 38));
        assert!(zeta_int(4, b, 40).close_to(&(&p2 * &p2).div_int(90), 38));
        assert_eq!(zeta_int(3, b, 40).to_decimal(25), "1.2020569031595942853997382");
    }

    #[test]
    fn gamma_constant() {
        let b = bits_for_digits(45);
        assert_eq!(euler_gamma(b, 40).to_decimal(30), "0.577215664901532860606512090082");
    }
}
