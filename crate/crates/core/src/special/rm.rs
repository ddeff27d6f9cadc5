//! The rational coefficients `r_m` of `ζ(2m+2)` in the closed form of
//! `ζ(1,1,2m̄)`.

use num_traits::Zero;

use crate::algebra::{int, rat, Elementary, elementary_series, Rational, XSeries};

use super::zeta_ring::pi_power_over_even_zeta;
use super::SpecialError;

/// Laurent data of `−5/(24t³) + π³csc³(πt)/12 − π³csc(πt)/48 + π²cot(πt)csc(πt)/(8t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RmExpansion {
    /// Coefficients of `t⁻³` and `t⁻¹` (must vanish).
    pub singular: [Rational; 2],
    /// `[t^{2m−1}]` divided by `π^{2m+2}` for `m = 0..=max_m`.
    pub pi_scaled: Vec<Rational>,
    /// `r_1..r_max_m`.
    pub r: Vec<Rational>,
}

/// `F(w) = t³·(combination)` at `w = πt`, so `[t^{2m−1}] = π^{2m+2}[w^{2m+2}]F`.
fn scaled_combination(order: usize) -> XSeries<Rational> {
    let s = elementary_series(Elementary::WCscW, order);
    let cos = elementary_series(Elementary::Cos, order);
    let w2 = XSeries::monomial(int(1), 2, order);
    let s2 = s.times(&s);
    XSeries::constant(rat(-5, 24), order)
        .plus(&s2.times(&s).scaled(&rat(1, 12)))
        .minus(&w2.times(&s).scaled(&rat(1, 48)))
        .plus(&cos.times(&s2).scaled(&rat(1, 8)))
}

pub fn rm_expansion(max_m: u32) -> Result<RmExpansion, SpecialError> {
    let order = 2 * max_m as usize + 2;
    let f = scaled_combination(order);
    let singular = [f.coeff(0), f.coeff(2)];
    if singular.iter().any(|c| !c.is_zero()) {
        return Err(SpecialError::SingularPart(Box::new(singular.clone())));
    }
    for k in 0..=order {
        if k % 2 == 1 && !f.coeff(k).is_zero() {
            return Err(SpecialError::OddPart(k as u32));
        }
    }
    let pi_scaled: Vec<Rational> = (0..=max_m).map(|m| f.coeff(2 * m as usize + 2)).collect();
    let r = (1..=max_m)
        .map(|m| &pi_scaled[m as usize] * pi_power_over_even_zeta(m + 1))
        .collect();
    Ok(RmExpansion { singular, pi_scaled, r })
}

/// `r_1..r_max_m`.
pub fn rm_coefficients(max_m: u32) -> Result<Vec<Rational>, SpecialError> {
    if max_m == 0 {
        return Err(SpecialError::EmptyRange);
    }
    Ok(rm_expansion(max_m)?.r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_values() {
        let r = rm_coefficients(4).unwrap();
        assert_eq!(r, vec![rat(3, 32), rat(151, 192), rat(3287, 1536), rat(10629, 2560)]);
    }

    #[test]
    fn singular_part_vanishes_and_r0_is_zero() {
        let e = rm_expansion(6).unwrap();
        assert!(e.singular.iter().all(Zero::is_zero));
        assert!(e.pi_scaled[0].is_zero());
        assert!(rm_coefficients(0).is_err());
    }
}
