use crate::algebra::{BivariateJet, Laurent, LaurentInS, Ring, SWindow, Var, XSeries};
use crate::par::{self, Exec};

use super::{derivative_only, OperatorError, OperatorSeries, Substitution};

/// A target `g(a, b; x)` as jets around the operator's base point, one jet
/// per x-order.
#[derive(Clone, Debug, PartialEq)]
pub struct FunctionJet {
    base: Substitution,
    orders: Vec<BivariateJet<LaurentInS>>,
}

impl FunctionJet {
    /// Panics on an empty list.
    pub fn new(base: Substitution, orders: Vec<BivariateJet<LaurentInS>>) -> Self {
        assert!(!orders.is_empty(), "a function jet needs at least the x^0 entry");
        FunctionJet { base, orders }
    }

    /// An x-independent target.
    pub fn constant(base: Substitution, jet: BivariateJet<LaurentInS>) -> Self {
        FunctionJet { base, orders: vec![jet] }
    }

    pub fn base(&self) -> Substitution {
        self.base
    }

    pub fn orders(&self) -> &[BivariateJet<LaurentInS>] {
        &self.orders
    }
}

/// `Σ c·s^k ∂_aⁱ∂_bʲ` acting on one jet: `Σ c·s^k·i!j![uⁱvʲ]`.
fn act(coef: &LaurentInS, jet: &BivariateJet<LaurentInS>, window: SWindow) -> Result<LaurentInS, OperatorError> {
    let mut acc: LaurentInS = Laurent::zero(window);
    for (e, p) in coef.checked_terms()? {
        derivative_only(&p)?;
        for (m, c) in p.terms() {
            let d = jet.partial(m.exponent(Var::Da), m.exponent(Var::Db))?;
            acc.accumulate(&d.shift(e).scaled(c));
        }
    }
    if let Some(k) = coef.known_to() {
        // an unknown operator tail leaves the product unknown above k + val
        let val = jet.entries().filter_map(|(_, c)| c.valuation()).min().unwrap_or(0);
        acc = acc.with_known_to(k + val);
    }
    Ok(acc)
}

pub fn apply(op: &OperatorSeries, target: &FunctionJet) -> Result<XSeries<LaurentInS>, OperatorError> {
    apply_with(Exec::default(), op, target)
}

/// Operator action with x-orders of operator and target convolved.
pub fn apply_with(exec: Exec, op: &OperatorSeries, target: &FunctionJet) -> Result<XSeries<LaurentInS>, OperatorError> {
    if op.substitution() != target.base {
        return Err(OperatorError::SubstitutionMismatch { op: op.substitution(), target: target.base });
    }
    let n = op.order();
    let window = op.coeff(0).window();
    let coeffs = par::map_range(exec, 0..n + 1, |k| {
        let mut acc: LaurentInS = Laurent::zero(window);
        for (q, jet) in target.orders.iter().enumerate().take(k + 1) {
            acc.accumulate(&act(&op.coeff(k - q), jet, window)?);
        }
        Ok(acc)
    });
    let coeffs: Result<Vec<_>, OperatorError> = coeffs.into_iter().collect();
    Ok(XSeries::from_coeffs(coeffs?))
}

/// Applies a `b = s` operator to a function of one variable given as an
/// x-series of Laurent series in `b`.
pub fn apply_to_laurent(op: &OperatorSeries, phi: &XSeries<LaurentInS>) -> Result<XSeries<LaurentInS>, OperatorError> {
    let (_, dv) = op.max_degrees(op.order());
    let jets = phi.coeffs().iter().map(|c| BivariateJet::from_laurent_v(c, dv)).collect();
    apply(op, &FunctionJet::new(Substitution::BEqS, jets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, SparsePoly};
    use crate::operators::{build_d2, build_d3, translation_operator};
    use crate::special::euler_at_zero;

    #[test]
    fn d2_on_one_is_euler_channel() {
        let n = 8;
        let w = SWindow::for_order(n);
        let d2 = build_d2(n, w).unwrap();
        let one = Laurent::constant(SparsePoly::one(), w);
        let out = apply_to_laurent(&d2, &XSeries::constant(one, n)).unwrap();
        assert!(out.coeff(0).terms().next().is_none());
        for k in 0..n {
            let c = out.coeff(k + 1);
            let expect = Laurent::monomial(SparsePoly::constant(-euler_at_zero(k as u32 + 1)), -(k as i32) - 1, w);
            assert_eq!(c, expect, "k = {k}");
        }
    }

    #[test]
    fn d3_on_zero_is_zero() {
        let w = SWindow::for_order(4);
        let d3 = build_d3(4, w).unwrap();
        let zero = XSeries::constant(Laurent::zero(w), 4);
        assert!(apply_to_laurent(&d3, &zero).unwrap().is_zero());
    }

    #[test]
    fn translation_of_square() {
        let w = SWindow::for_order(3);
        let t = translation_operator(3, w);
        let b2 = Laurent::monomial(SparsePoly::one(), 2, w);
        let out = apply_to_laurent(&t, &XSeries::constant(b2, 3)).unwrap();
        assert_eq!(out.coeff(0).coeff(2).unwrap(), SparsePoly::one());
        assert_eq!(out.coeff(1).coeff(1).unwrap(), SparsePoly::constant(int(2)));
        assert_eq!(out.coeff(2).coeff(0).unwrap(), SparsePoly::one());
        assert!(out.coeff(3).vanishes());
    }

    #[test]
    fn substitution_mismatch() {
        let w = SWindow::for_order(2);
        let d2 = build_d2(2, w).unwrap();
        let jet = BivariateJet::new(1, 1, Laurent::zero(w));
        let target = FunctionJet::constant(Substitution::AMinusSBS, jet);
        assert!(matches!(apply(&d2, &target), Err(OperatorError::SubstitutionMismatch { .. })));
    }
}
