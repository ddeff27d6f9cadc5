use std::fmt;

use num_traits::{One, Zero};

use super::{AlgebraError, Rational, Ring};
use crate::par::{self, Exec};

/// Truncated power series `Σ_{n≤N} c_n xⁿ` over a coefficient ring.
///
/// The coefficient vector always has length `N + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct XSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> XSeries<R> {
    /// Series with every coefficient equal to `zero`.
    pub fn zero(zero: R, order: usize) -> Self {
        XSeries { coeffs: vec![zero; order + 1] }
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); order + 1];
        coeffs[0] = c;
        XSeries { coeffs }
    }

    /// `c·x^k`, or the zero series if `k > order`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        XSeries { coeffs }
    }

    /// Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the x^0 coefficient");
        XSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.coeffs[0].zero_like())
    }

    pub fn set_coeff(&mut self, k: usize, c: R) {
        self.coeffs[k] = c;
    }

    pub fn zero_coeff(&self) -> R {
        self.coeffs[0].zero_like()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::vanishes)
    }

    /// x-adic valuation, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.vanishes())
    }

    /// Truncates (or zero-pads) to a new order.
    pub fn truncate(&self, order: usize) -> Self {
        let z = self.zero_coeff();
        let coeffs = (0..=order)
            .map(|k| self.coeffs.get(k).cloned().unwrap_or_else(|| z.clone()))
            .collect();
        XSeries { coeffs }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        XSeries {
            coeffs: (0..=order).map(|k| self.coeffs[k].plus(&other.coeffs[k])).collect(),
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        XSeries {
            coeffs: (0..=order).map(|k| self.coeffs[k].minus(&other.coeffs[k])).collect(),
        }
    }

    pub fn negated(&self) -> Self {
        self.map(Ring::negated)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        self.map(|r| r.scaled(c))
    }

    /// Multiplies every coefficient by a ring element.
    pub fn mul_coeff(&self, r: &R) -> Self {
        self.map(|c| c.times(r))
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        XSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn map_into<S: Ring>(&self, f: impl Fn(&R) -> S) -> XSeries<S> {
        XSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn times(&self, other: &Self) -> Self {
        self.times_with(Exec::Sequential, other)
    }

    pub fn times_with(&self, exec: Exec, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = par::map_range(exec, 0..order + 1, |n| {
            let mut acc = self.zero_coeff();
            for i in 0..=n {
                let (a, b) = (&self.coeffs[i], &other.coeffs[n - i]);
                if a.vanishes() || b.vanishes() {
                    continue;
                }
                acc.accumulate(&a.times(b));
            }
            acc
        });
        XSeries { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = XSeries::constant(self.coeffs[0].one_like(), self.order());
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let z = self.zero_coeff();
        let n = self.order();
        let coeffs = (0..=n)
            .map(|i| if i >= k { self.coeffs[i - k].clone() } else { z.clone() })
            .collect();
        XSeries { coeffs }
    }

    /// Divides by `x`. The result has order one less than the input.
    pub fn div_x(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].vanishes() {
            return Err(AlgebraError::ValuationViolation);
        }
        if self.coeffs.len() == 1 {
            return Err(AlgebraError::ValuationViolation);
        }
        Ok(XSeries { coeffs: self.coeffs[1..].to_vec() })
    }

    /// Formal d/dx; the order drops by one (never below zero).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return XSeries::zero(self.zero_coeff(), 0);
        }
        let coeffs = (1..=self.order())
            .map(|k| self.coeffs[k].scaled(&Rational::from_integer((k as u64).into())))
            .collect();
        XSeries { coeffs }
    }

    /// Multiplicative inverse; the constant term must be a nonzero rational.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let c0 = self.coeffs[0].to_constant().ok_or(AlgebraError::NotInvertible)?;
        if c0.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(self.coeffs[0].one_like().scaled(&inv0));
        for k in 1..=n {
            let mut acc = self.zero_coeff();
            for i in 1..=k {
                if self.coeffs[i].vanishes() {
                    continue;
                }
                acc.accumulate(&self.coeffs[i].times(&out[k - i]));
            }
            out.push(acc.scaled(&-inv0.clone()));
        }
        Ok(XSeries { coeffs: out })
    }

    /// Replaces `x` by `c·x`.
    pub fn rescale_x(&self, c: &Rational) -> Self {
        let mut p = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for r in &self.coeffs {
            coeffs.push(r.scaled(&p));
            p *= c;
        }
        XSeries { coeffs }
    }
}

impl XSeries<Rational> {
    /// Lifts a rational series into any ring by scaling `one`.
    pub fn lift<R: Ring>(&self, one: &R) -> XSeries<R> {
        self.map_into(|c| one.scaled(c))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for XSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.vanishes() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·x")?,
                _ => write!(f, "({c})·x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// Cauchy product; unlike [`XSeries::times`] the orders must agree.
pub fn series_mul<R: Ring>(f: &XSeries<R>, g: &XSeries<R>) -> Result<XSeries<R>, AlgebraError> {
    if f.order() != g.order() {
        return Err(AlgebraError::OrderMismatch { left: f.order(), right: g.order() });
    }
    Ok(f.times(g))
}

/// `outer(inner(x))` for an inner series with zero constant term.
pub fn series_compose<R: Ring>(
    outer: &XSeries<Rational>,
    inner: &XSeries<R>,
) -> Result<XSeries<R>, AlgebraError> {
    if !inner.coeffs[0].vanishes() {
        return Err(AlgebraError::NonzeroConstantTerm);
    }
    let n = inner.order();
    let one = inner.coeffs[0].one_like();
    let mut acc = XSeries::zero(inner.zero_coeff(), n);
    let mut power = XSeries::constant(one, n);
    // inner^k has valuation ≥ k, so terms past the order vanish.
    for k in 0..=n.min(outer.order()) {
        let c = &outer.coeffs[k];
        if !c.is_zero() {
            acc = acc.plus(&power.scaled(c));
        }
        if k < n {
            power = power.times(inner);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, SparsePoly, Var};

    fn q(cs: &[i64]) -> XSeries<Rational> {
        XSeries::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn product_truncates() {
        assert_eq!(series_mul(&q(&[1, 1, 0]), &q(&[1, -1, 0])).unwrap(), q(&[1, 0, -1]));
        assert_eq!(q(&[0, 1]).times(&q(&[0, 1])), q(&[0, 0]));
        assert!(matches!(
            series_mul(&q(&[1, 1]), &q(&[1, 1, 1])),
            Err(AlgebraError::OrderMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn inverse_of_geometric() {
        let inv = q(&[1, -1, 0, 0]).inverse().unwrap();
        assert_eq!(inv, q(&[1, 1, 1, 1]));
        assert!(q(&[0, 1]).inverse().is_err());
    }

    #[test]
    fn div_x_checks_valuation() {
        assert_eq!(q(&[0, 2, 3]).div_x().unwrap(), q(&[2, 3]));
        assert_eq!(q(&[1, 2]).div_x(), Err(AlgebraError::ValuationViolation));
    }

    #[test]
    fn compose_exp_with_xy() {
        let exp = XSeries::from_coeffs(vec![int(1), int(1), rat(1, 2)]);
        let y = SparsePoly::var(Var::Y);
        let inner = XSeries::from_coeffs(vec![SparsePoly::zero(), y.clone(), SparsePoly::zero()]);
        let out = series_compose(&exp, &inner).unwrap();
        assert_eq!(out.coeff(2), y.pow(2).scale(&rat(1, 2)));
        let bad = XSeries::from_coeffs(vec![SparsePoly::one(), y]);
        assert_eq!(series_compose(&exp, &bad), Err(AlgebraError::NonzeroConstantTerm));
    }

    #[test]
    fn derivative_and_shift() {
        assert_eq!(q(&[5, 1, 1, 1]).derivative(), q(&[1, 2, 3]));
        assert_eq!(q(&[1, 2, 3]).shift_up(1), q(&[0, 1, 2]));
        assert_eq!(q(&[1, 1, 1]).rescale_x(&int(2)), q(&[1, 2, 4]));
    }
}
