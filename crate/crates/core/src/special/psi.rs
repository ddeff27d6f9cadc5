//! The bookkeeping series `Ψ(z) = Σ E_k(0) zᵏ` and `Ω = Ψ + zΨ′`.

use crate::algebra::{int, Rational, XSeries};

use super::numbers::euler_at_zero;

#[derive(Clone, Debug, PartialEq)]
pub struct PsiOmegaSeries {
    pub psi: XSeries<Rational>,
    pub omega: XSeries<Rational>,
}

pub fn psi_omega(order: usize) -> PsiOmegaSeries {
    let psi: Vec<Rational> = (0..=order as u32).map(euler_at_zero).collect();
    let omega = psi.iter().enumerate().map(|(k, e)| e * int(k as i64 + 1)).collect();
    PsiOmegaSeries { psi: XSeries::from_coeffs(psi), omega: XSeries::from_coeffs(omega) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn leading_terms() {
        let po = psi_omega(3);
        assert_eq!(po.psi.coeffs(), &[int(1), rat(-1, 2), int(0), rat(1, 4)]);
        assert_eq!(po.omega.coeff(0), int(1));
        assert_eq!(po.omega.coeff(1), int(-1));
    }

    #[test]
    fn omega_is_psi_plus_z_psi_prime() {
        let n = 12;
        let po = psi_omega(n);
        let zpsi = po.psi.derivative().truncate(n).shift_up(1);
        assert_eq!(po.omega, po.psi.plus(&zpsi));
        for k in 1..=n / 2 {
            assert_eq!(po.psi.coeff(2 * k), int(0));
        }
    }

    #[test]
    fn psi_times_reciprocal_is_one() {
        let psi = psi_omega(10).psi;
        let inv = psi.inverse().unwrap();
        assert_eq!(psi.times(&inv), XSeries::constant(int(1), 10));
    }
}
