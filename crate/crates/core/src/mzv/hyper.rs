//! `₂F₁` at `z = 1/2` and at `z = −1`.

use num_traits::Signed;

use super::accel::{alternating_sum, terms_for_digits};
use super::consts::{exp, ln2};
use super::real::Fixed;
use super::MzvError;

fn non_positive_integer(c: &Fixed) -> bool {
    let f = c.floor();
    !f.is_positive() && Fixed::from_bigint(&f, c.bits()) == *c
}

/// Plain hypergeometric series, used for `|z| ≤ 1/2`.
pub fn hyp2f1_series(a: &Fixed, b: &Fixed, c: &Fixed, z: &Fixed) -> Result<Fixed, MzvError> {
    if non_positive_integer(c) {
        return Err(MzvError::Pole(c.to_f64()));
    }
    let bits = a.bits();
    let one = Fixed::from_int(1, bits);
    let mut term = one.clone();
    let mut sum = one.clone();
    let mut n: i64 = 0;
    loop {
        let nf = Fixed::from_int(n, bits);
        let ratio = (&(a + &nf) * &(b + &nf)).div(&(&(c + &nf) * &Fixed::from_int(n + 1, bits)));
        term = &(&term * &ratio) * z;
        n += 1;
        if term.mantissa().magnitude().bits() <= 4 && n > 8 {
            break;
        }
        sum = &sum + &term;
        if n > 100_000 {
            return Err(MzvError::Stalled("hypergeometric series".into()));
        }
    }
    Ok(sum)
}

/// `₂F₁(a,b;c;−1) = 2^{−a} ₂F₁(a, c−b; c; 1/2)`.
pub fn hyp2f1_at_minus1(a: &Fixed, b: &Fixed, c: &Fixed) -> Result<Fixed, MzvError> {
    let bits = a.bits();
    let half = Fixed::from_int(1, bits).div_int(2);
    let f = hyp2f1_series(a, &(c - b), c, &half)?;
    let scale = exp(&-(a * &ln2(bits)));
    Ok(&scale * &f)
}

/// Independent route: the defining series at `z = −1`, with the tail past
/// the sign changes of the Pochhammer factors accelerated as an
/// alternating sum.
pub fn hyp2f1_at_minus1_direct(a: &Fixed, b: &Fixed, c: &Fixed, digits: u32) -> Result<Fixed, MzvError> {
    if non_positive_integer(c) {
        return Err(MzvError::Pole(c.to_f64()));
    }
    let bits = a.bits();
    let one = Fixed::from_int(1, bits);
    let start = [a, b, c]
        .iter()
        .map(|p| (-p.floor()).to_string().parse::<i64>().unwrap_or(0).max(0) + 1)
        .max()
        .unwrap_or(1)
        .max(1) as usize;
    let n = terms_for_digits(digits);
    let mut t = vec![one.clone()];
    for k in 0..(start + n) as i64 {
        let kf = Fixed::from_int(k, bits);
        let ratio = (&(a + &kf) * &(b + &kf)).div(&(&(c + &kf) * &Fixed::from_int(k + 1, bits)));
        let next = &t[k as usize] * &ratio;
        t.push(next);
    }
    let mut head = Fixed::zero(bits);
    for (k, tk) in t.iter().enumerate().take(start) {
        head = if k % 2 == 0 { &head + tk } else { &head - tk };
    }
    let tail = alternating_sum(n, |j| t[start + j].clone());
    Ok(if start.is_multiple_of(2) { &head + &tail } else { &head - &tail })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::mzv::real::bits_for_digits;

    fn q(n: i64, d: i64, b: u32) -> Fixed {
        Fixed::from_rational(&rat(n, d), b)
    }

    #[test]
    fn zero_parameter_gives_one() {
        let b = bits_for_digits(40);
        let v = hyp2f1_at_minus1(&q(0, 1, b), &q(3, 10, b), &q(13, 10, b)).unwrap();
        assert!(v.close_to(&Fixed::from_int(1, b), 35));
    }

    #[test]
    fn two_routes_agree() {
        let b = bits_for_digits(45);
        let (x, y, z) = (q(1, 5, b), q(-2, 5, b), q(3, 5, b));
        let t = hyp2f1_at_minus1(&x, &y, &z).unwrap();
        let d = hyp2f1_at_minus1_direct(&x, &y, &z, 40).unwrap();
        assert!(t.close_to(&d, 30), "{t} vs {d}");
    }

    #[test]
    fn pole_in_c() {
        let b = bits_for_digits(20);
        assert!(hyp2f1_at_minus1(&q(1, 2, b), &q(1, 3, b), &q(-2, 1, b)).is_err());
    }
}
