use crate::algebra::{
    elementary_series, factorial_q, int, rat, series_compose, AlgebraError, Elementary, Laurent, Rational, SWindow,
    SparsePoly, Var, XSeries,
};
use crate::special::euler_at_zero;

use super::laplace::{s_laplace, PreLaplaceSeries};
use super::{OperatorSeries, Substitution};

fn y() -> SparsePoly {
    SparsePoly::var(Var::Y)
}

fn da() -> SparsePoly {
    SparsePoly::var(Var::Da)
}

fn db() -> SparsePoly {
    SparsePoly::var(Var::Db)
}

/// `kind(c·x·p)` to the given order.
fn func_of(kind: Elementary, p: &SparsePoly, c: Rational, order: usize) -> PreLaplaceSeries {
    let inner = XSeries::monomial(p.scale(&c), 1, order);
    series_compose(&elementary_series(kind, order), &inner).expect("inner series has valuation 1")
}

/// The rational constants of the D₁ brace, exposed so that a perturbed
/// operator can be built for mutation testing.
#[derive(Clone, Debug, PartialEq)]
pub struct D1Constants {
    /// `y/2`.
    pub half_y: Rational,
    /// `−½(∂_a−∂_b) tanh(xy/2)`.
    pub tanh: Rational,
    /// `−¼ x y (∂_a−∂_b) sech²(xy/2)`.
    pub sech2: Rational,
    /// `½ y sech(xy/2) sinh(x(∂_a−∂_b)/2) sech(x(∂_a−∂_b+y)/2)`.
    pub sinh_branch: Rational,
    /// `−(1/x) sinh(xy/2) exp(x(∂_a+∂_b)/2) sech(x(∂_a−∂_b+y)/2)`.
    pub exp_branch: Rational,
}

impl Default for D1Constants {
    fn default() -> Self {
        D1Constants {
            half_y: rat(1, 2),
            tanh: rat(1, 2),
            sech2: rat(1, 4),
            sinh_branch: rat(1, 2),
            exp_branch: int(1),
        }
    }
}

/// The pre-Laplace series of D₁ (polynomials in `y`, `∂_a`, `∂_b`).
pub fn d1_pre_laplace(order: usize, k: &D1Constants) -> Result<PreLaplaceSeries, AlgebraError> {
    let m = order + 1;
    let half = rat(1, 2);
    let dmin = da().sub(&db());
    let z = dmin.add(&y());
    let sech_z = func_of(Elementary::Sech, &z, half.clone(), m);
    let sinh_t = func_of(Elementary::Sinh, &y(), half.clone(), m);

    let mut pre = XSeries::constant(y().scale(&k.half_y), m);
    let tanh_t = func_of(Elementary::Tanh, &y(), half.clone(), m);
    pre = pre.minus(&tanh_t.mul_coeff(&dmin.scale(&k.tanh)));
    let sech2_t = func_of(Elementary::Sech2, &y(), half.clone(), m);
    pre = pre.minus(&sech2_t.mul_coeff(&y().mul(&dmin).scale(&k.sech2)).shift_up(1));
    let sinh_w = func_of(Elementary::Sinh, &dmin, half.clone(), m);
    let sech_t = func_of(Elementary::Sech, &y(), half.clone(), m);
    let branch = sech_t.times(&sinh_w).times(&sech_z).mul_coeff(&y().scale(&k.sinh_branch));
    pre = pre.plus(&branch);

    let exp_e = func_of(Elementary::Exp, &da().add(&db()), half, m);
    let tail = sinh_t.times(&exp_e).times(&sech_z).scaled(&k.exp_branch);
    // valuation ≥ 1 is asserted by div_x
    let tail = tail.div_x()?;
    Ok(pre.truncate(order).minus(&tail.truncate(order)))
}

pub fn build_d1(order: usize, window: SWindow) -> Result<OperatorSeries, AlgebraError> {
    build_d1_with(order, window, &D1Constants::default())
}

pub fn build_d1_with(order: usize, window: SWindow, k: &D1Constants) -> Result<OperatorSeries, AlgebraError> {
    s_laplace(&d1_pre_laplace(order, k)?, window, Substitution::AMinusSBS)
}

/// `s·L{tanh(x(y−∂_b)/2)}`, then `b = s`.
pub fn build_d2(order: usize, window: SWindow) -> Result<OperatorSeries, AlgebraError> {
    let pre = func_of(Elementary::Tanh, &y().sub(&db()), rat(1, 2), order);
    s_laplace(&pre, window, Substitution::BEqS)
}

/// `s·L{−(x/4)(−2 + xy·tanh(xy/2))·sech²(xy/2)}`, then `b = s`.
pub fn build_d3(order: usize, window: SWindow) -> Result<OperatorSeries, AlgebraError> {
    let tanh_t = func_of(Elementary::Tanh, &y(), rat(1, 2), order);
    let sech2_t = func_of(Elementary::Sech2, &y(), rat(1, 2), order);
    let bracket = XSeries::constant(SparsePoly::constant(int(-2)), order).plus(&tanh_t.mul_coeff(&y()).shift_up(1));
    let pre = bracket.times(&sech2_t).shift_up(1).scaled(&rat(-1, 4));
    s_laplace(&pre, window, Substitution::BEqS)
}

/// The three pieces `D₁⁰ + D₁¹ + D₁²` of D₁.
#[derive(Clone, Debug, PartialEq)]
pub struct D1Split {
    pub d10: OperatorSeries,
    pub d11: OperatorSeries,
    pub d12: OperatorSeries,
}

impl D1Split {
    pub fn sum(&self) -> OperatorSeries {
        self.d10
            .plus(&self.d11)
            .and_then(|s| s.plus(&self.d12))
            .expect("all pieces carry a=−s, b=s")
    }
}

pub fn build_d1_split(order: usize, window: SWindow) -> Result<D1Split, AlgebraError> {
    let m = order + 1;
    let half = rat(1, 2);
    let dmin = da().sub(&db());

    let d10 = s_laplace(&XSeries::constant(y().scale(&half), order), window, Substitution::AMinusSBS)?;

    let tanh_t = func_of(Elementary::Tanh, &y(), half.clone(), order);
    let inner = tanh_t.mul_coeff(&y().mul(&dmin)).map(|p| p.derivative(Var::Y));
    let d11 = s_laplace(&inner.scaled(&rat(-1, 2)), window, Substitution::AMinusSBS)?;

    // logistic(w) = ½·EulerGen(−w), y/(1+e^{xy}) = (y/2)·EulerGen(xy)
    let logistic = func_of(Elementary::EulerGen, &dmin.add(&y()), int(-1), order).scaled(&half);
    let exp_my = func_of(Elementary::Exp, &y(), int(-1), m);
    let ratio = exp_my.minus(&XSeries::constant(SparsePoly::one(), m)).div_x()?;
    let exp_db = func_of(Elementary::Exp, &db(), int(1), order);
    let first = ratio.truncate(order).times(&exp_db);
    let one_minus = XSeries::constant(SparsePoly::one(), order).minus(&func_of(Elementary::Exp, &dmin, int(-1), order));
    let fermi = func_of(Elementary::EulerGen, &y(), int(1), order).mul_coeff(&y().scale(&half));
    let second = one_minus.times(&fermi);
    let pre = logistic.times(&first.plus(&second));
    let d12 = s_laplace(&pre, window, Substitution::AMinusSBS)?;
    Ok(D1Split { d10, d11, d12 })
}

/// `L₂ = 2s/(1+exp(x∂_b)) = s·Σ E_i(0) xⁱ ∂_bⁱ/i!`, then `b = s`.
pub fn build_l2(order: usize, window: SWindow) -> OperatorSeries {
    let coeffs = (0..=order as u32)
        .map(|i| {
            let c = euler_at_zero(i) / factorial_q(i);
            Laurent::monomial(db().pow(i).scale(&c), 1, window)
        })
        .collect();
    OperatorSeries::new(XSeries::from_coeffs(coeffs), Substitution::BEqS)
}

/// `exp(x∂_b)` followed by `b = s`: translation by `x`.
pub fn translation_operator(order: usize, window: SWindow) -> OperatorSeries {
    let coeffs = (0..=order as u32)
        .map(|i| Laurent::monomial(db().pow(i).scale(&factorial_q(i).recip()), 0, window))
        .collect();
    OperatorSeries::new(XSeries::from_coeffs(coeffs), Substitution::BEqS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;
    use crate::operators::format_coefficient;

    #[test]
    fn d1_vanishes_at_x0_and_matches_printed_x3() {
        let d1 = build_d1(5, SWindow::for_order(5)).unwrap();
        assert!(d1.coeff(0).terms().next().is_none());
        assert_eq!(
            format_coefficient(&d1.coeff(3)),
            "∂_a∂_b/(4s²) − ∂_a(∂_b)²/(8s) + ∂_a/(4s³) − (∂_b)²/(4s²) + (∂_b)³/(24s)"
        );
    }

    #[test]
    fn d2_low_orders() {
        let d2 = build_d2(4, SWindow::for_order(4)).unwrap();
        assert!(d2.coeff(0).terms().next().is_none());
        // [x¹] = s·L{(y − ∂_b)/2} = 1/(2s) − ∂_b/2
        let c1 = d2.coeff(1);
        assert_eq!(c1.coeff(-1).unwrap(), SparsePoly::constant(rat(1, 2)));
        assert_eq!(c1.coeff(0).unwrap(), SparsePoly::var(Var::Db).scale(&rat(-1, 2)));
    }

    #[test]
    fn split_sums_to_d1() {
        for n in 0..=6 {
            let w = SWindow::for_order(n);
            let d1 = build_d1(n, w).unwrap();
            let split = build_d1_split(n, w).unwrap();
            assert!(split.sum().same_as(&d1), "order {n}");
            assert_eq!(split.d10.coeff(0).coeff(-1).unwrap(), SparsePoly::constant(rat(1, 2)));
        }
    }

    #[test]
    fn l2_leading_terms() {
        let l2 = build_l2(2, SWindow::for_order(2));
        assert_eq!(l2.coeff(0).coeff(1).unwrap(), SparsePoly::one());
        assert_eq!(l2.coeff(1).coeff(1).unwrap(), SparsePoly::var(Var::Db).scale(&rat(-1, 2)));
        assert!(l2.coeff(2).vanishes());
    }
}
