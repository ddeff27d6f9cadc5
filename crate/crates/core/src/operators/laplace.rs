use crate::algebra::{factorial, AlgebraError, Laurent, LaurentInS, Rational, SWindow, SparsePoly, Var, XSeries};

use super::{OperatorSeries, Substitution};

/// An x-series whose coefficients are polynomials in `y`, `∂_a`, `∂_b`.
pub type PreLaplaceSeries = XSeries<SparsePoly>;

/// Coefficient-wise `yⁿ ↦ n!/s^{n+1}`; `∂_a`, `∂_b` pass through.
pub fn formal_laplace(f: &PreLaplaceSeries, window: SWindow) -> Result<OperatorSeries, AlgebraError> {
    let mut coeffs = Vec::with_capacity(f.order() + 1);
    for p in f.coeffs() {
        let mut out: LaurentInS = Laurent::zero(window);
        for (key, rest) in p.split_by(&[Var::Y]) {
            let n = key[0];
            let e = -(n as i32) - 1;
            if e < window.min {
                return Err(AlgebraError::WindowOverflow { exponent: e, min: window.min, max: window.max });
            }
            out.add_term(e, rest.scale(&Rational::from_integer(factorial(n))));
        }
        coeffs.push(out);
    }
    Ok(OperatorSeries::new(XSeries::from_coeffs(coeffs), Substitution::None))
}

/// `s·L{f}` tagged with the given substitution, the shape of every
/// operator in the calculus.
pub fn s_laplace(
    f: &PreLaplaceSeries,
    window: SWindow,
    substitution: Substitution,
) -> Result<OperatorSeries, AlgebraError> {
    let l = formal_laplace(f, window)?;
    Ok(OperatorSeries::new(l.body().map(|c| c.shift(1)), substitution))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, Monomial};

    #[test]
    fn monomial_rule() {
        let w = SWindow::new(-6, 6);
        let y2 = XSeries::constant(SparsePoly::var(Var::Y).pow(2), 0);
        let l = formal_laplace(&y2, w).unwrap();
        assert_eq!(l.coeff(0).coeff(-3).unwrap(), SparsePoly::constant(int(2)));
        let one = XSeries::constant(SparsePoly::one(), 0);
        assert_eq!(formal_laplace(&one, w).unwrap().coeff(0).coeff(-1).unwrap(), SparsePoly::one());
        let yda = SparsePoly::term(Monomial::from_pairs([(Var::Y, 1), (Var::Da, 1)]), int(1));
        let f = XSeries::monomial(yda, 1, 1);
        let l = formal_laplace(&f, w).unwrap();
        assert_eq!(l.coeff(1).coeff(-2).unwrap(), SparsePoly::var(Var::Da));
        assert!(l.coeff(0).terms().next().is_none());
    }

    #[test]
    fn window_overflow_is_an_error() {
        let w = SWindow::new(-2, 2);
        let y2 = XSeries::constant(SparsePoly::var(Var::Y).pow(2), 0);
        assert!(matches!(formal_laplace(&y2, w), Err(AlgebraError::WindowOverflow { exponent: -3, .. })));
    }
}
