//! Generating-function identity for generic `f`, both sides computed
//! independently.

use crate::algebra::{rat, BivariateJet, LaurentInS, Ring, SWindow, SparsePoly, XSeries};
use crate::operators::{
    apply_to_laurent, apply_with, build_d1_with, build_d2, build_d3, build_l2, D1Constants, FunctionJet,
    OperatorError, OperatorSeries, Substitution,
};
use crate::par::Exec;

use super::generic::GenericFunction;
use super::report::{compare_series, CheckReport, ReportBuilder};
use super::VerifyError;

pub(crate) fn window_for(order: usize, degree: u32) -> SWindow {
    let r = (order + degree as usize + 4) as i32;
    SWindow::new(-r, r)
}

/// `op ∘ p` for a polynomial `p` in `a`, `b` at the operator's base point.
pub(crate) fn apply_poly(exec: Exec, op: &OperatorSeries, p: &SparsePoly, window: SWindow) -> Result<XSeries<LaurentInS>, VerifyError> {
    let (du, dv) = op.max_degrees(op.order());
    let with_a = op.substitution() == Substitution::AMinusSBS;
    let jet = BivariateJet::from_ab_poly(p, with_a, du, dv, window, None).map_err(OperatorError::from)?;
    Ok(apply_with(exec, op, &FunctionJet::constant(op.substitution(), jet))?)
}

/// `(f(x,s) − f(0,s)) + L₂ ∘ ((f(0,−b)+f(0,b)−f(x,−b)−f(x,b))/(2b))`.
pub(crate) fn theorem_lhs(f: &GenericFunction, order: usize, window: SWindow) -> Result<XSeries<LaurentInS>, VerifyError> {
    let diff = f.line(true, 1, order, window).minus(&f.line(false, 1, order, window));
    let h = sym_bracket(f, order, window);
    let l2 = build_l2(order, window);
    Ok(diff.plus(&apply_to_laurent(&l2, &h)?))
}

/// `(f(0,−b) + f(0,b) − f(x,−b) − f(x,b))/(2b)`.
pub(crate) fn sym_bracket(f: &GenericFunction, order: usize, window: SWindow) -> XSeries<LaurentInS> {
    let zero = f.line(false, -1, order, window).plus(&f.line(false, 1, order, window));
    let full = f.line(true, -1, order, window).plus(&f.line(true, 1, order, window));
    zero.minus(&full).map(|c| c.shift(-1).scaled(&rat(1, 2)))
}

pub(crate) fn theorem_rhs(
    exec: Exec,
    f: &GenericFunction,
    order: usize,
    window: SWindow,
    constants: &D1Constants,
) -> Result<XSeries<LaurentInS>, VerifyError> {
    let d1 = build_d1_with(order, window, constants).map_err(OperatorError::from)?;
    let d2 = build_d2(order, window).map_err(OperatorError::from)?;
    let d3 = build_d3(order, window).map_err(OperatorError::from)?;
    let r1 = apply_poly(exec, &d1, &f.d1_target(), window)?;
    let r2 = apply_poly(exec, &d2, &f.at_zero(), window)?;
    let r3 = apply_poly(exec, &d3, &f.d3_target(), window)?;
    Ok(r1.plus(&r2).plus(&r3))
}

pub fn check_main_theorem(order: usize, degree: u32, exec: Exec) -> Result<CheckReport, VerifyError> {
    check_main_theorem_with(order, degree, &D1Constants::default(), exec)
}

/// As [`check_main_theorem`] with the rational constants of D₁ replaced,
/// for mutation testing.
pub fn check_main_theorem_with(order: usize, degree: u32, constants: &D1Constants, exec: Exec) -> Result<CheckReport, VerifyError> {
    let mut report = ReportBuilder::new("main_theorem", "generating-function identity for generic f")
        .param("order", order as u64)
        .param("degree", degree as u64);
    let f = GenericFunction::new(degree);
    let window = window_for(order, degree);
    let lhs = theorem_lhs(&f, order, window)?;
    let rhs = theorem_rhs(exec, &f, order, window, constants)?;
    report.record(compare_series(&lhs, &rhs));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn small_orders_pass() {
        for (n, d) in [(0, 0), (2, 2), (4, 3)] {
            let r = check_main_theorem(n, d, Exec::Sequential).unwrap();
            assert!(r.passed(), "{n} {d}: {:?}", r.first_mismatch);
        }
    }

    #[test]
    fn perturbed_sech2_constant_fails() {
        let k = D1Constants { sech2: rat(1, 5), ..D1Constants::default() };
        let r = check_main_theorem_with(4, 4, &k, Exec::Sequential).unwrap();
        assert!(!r.passed());
        assert!(r.first_mismatch.is_some());
    }
}
