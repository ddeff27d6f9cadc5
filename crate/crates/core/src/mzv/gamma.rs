//! Γ and ψ for real arguments by upward shift and the Stirling series.

use num_traits::{Signed, ToPrimitive};

use super::consts::{exp, ln, pi};
use super::real::Fixed;
use crate::special::bernoulli;

use super::MzvError;

/// Shift target for the asymptotic expansions.
fn shift_target(digits: u32) -> i64 {
    digits as i64 + 10
}

fn check_pole(z: &Fixed) -> Result<(), MzvError> {
    let f = z.floor();
    if !f.is_positive() && Fixed::from_bigint(&f, z.bits()) == *z {
        return Err(MzvError::Pole(z.to_f64()));
    }
    Ok(())
}

/// `(w, Π_{k<N}(z+k))` with `w = z + N ≥ target`.
fn shift_up(z: &Fixed, digits: u32) -> (Fixed, Vec<Fixed>) {
    let bits = z.bits();
    let target = shift_target(digits);
    let zf = z.floor().to_i64().unwrap_or(0);
    let n = (target - zf).max(0);
    let factors = (0..n).map(|k| z + &Fixed::from_int(k, bits)).collect();
    (z + &Fixed::from_int(n, bits), factors)
}

/// Stirling series for `ln Γ(w)`, large `w`.
fn ln_gamma_large(w: &Fixed) -> Fixed {
    let bits = w.bits();
    let half = Fixed::from_int(1, bits).div_int(2);
    let two_pi = pi(bits).mul_int(2);
    let lnw = ln(w);
    let mut acc = &(&(w - &half) * &lnw) - w;
    acc = &acc + &(&ln(&two_pi) * &half);
    let winv = w.recip();
    let winv2 = &winv * &winv;
    let mut power = winv.clone();
    for k in 1u32.. {
        let b = Fixed::from_rational(&bernoulli(2 * k), bits);
        let t = b.mul_int(1).div_int((2 * k * (2 * k - 1)) as i64);
        let t = &t * &power;
        if t.is_zero() || k > 400 {
            break;
        }
        acc = &acc + &t;
        power = &power * &winv2;
    }
    acc
}

pub fn gamma(z: &Fixed, digits: u32) -> Result<Fixed, MzvError> {
    check_pole(z)?;
    let (w, factors) = shift_up(z, digits);
    let mut g = exp(&ln_gamma_large(&w));
    for f in factors {
        g = g.div(&f);
    }
    Ok(g)
}

pub fn digamma(z: &Fixed, digits: u32) -> Result<Fixed, MzvError> {
    check_pole(z)?;
    let (w, factors) = shift_up(z, digits);
    let bits = z.bits();
    let winv = w.recip();
    let mut acc = &ln(&w) - &winv.div_int(2);
    let winv2 = &winv * &winv;
    let mut power = winv2.clone();
    for k in 1u32.. {
        let b = Fixed::from_rational(&bernoulli(2 * k), bits);
        let t = &b.div_int(2 * k as i64) * &power;
        if t.is_zero() || k > 400 {
            break;
        }
        acc = &acc - &t;
        power = &power * &winv2;
    }
    for f in factors {
        acc = &acc - &f.recip();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::mzv::real::bits_for_digits;
    use crate::mzv::zeta::euler_gamma;

    #[test]
    fn half_squared_is_pi() {
        let b = bits_for_digits(45);
        let g = gamma(&Fixed::from_rational(&rat(1, 2), b), 40).unwrap();
        assert!((&g * &g).close_to(&pi(b), 36));
        let five = gamma(&Fixed::from_int(5, b), 40).unwrap();
        assert!(five.close_to(&Fixed::from_int(24, b), 36));
        // Γ(−1/2) = −2√π
        let mh = gamma(&Fixed::from_rational(&rat(-1, 2), b), 40).unwrap();
        assert!(mh.close_to(&pi(b).sqrt().mul_int(-2), 36));
    }

    #[test]
    fn digamma_at_one_is_minus_gamma() {
        let b = bits_for_digits(45);
        let psi1 = digamma(&Fixed::from_int(1, b), 40).unwrap();
        assert!(psi1.close_to(&-euler_gamma(b, 40), 36));
    }

    #[test]
    fn poles() {
        let b = bits_for_digits(20);
        assert!(gamma(&Fixed::from_int(0, b), 15).is_err());
        assert!(digamma(&Fixed::from_int(-3, b), 15).is_err());
    }
}
