use std::collections::BTreeMap;

use num_traits::Zero;

use super::{binomial, AlgebraError, BaseRing, Rational, Ring, SparsePoly};

/// Admissible exponent range for Laurent series in `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SWindow {
    pub min: i32,
    pub max: i32,
}

impl SWindow {
    pub fn new(min: i32, max: i32) -> Self {
        assert!(min <= 0 && max >= 0, "window must contain s^0");
        SWindow { min, max }
    }

    /// Default window `[−(N+3), N+3]` for x-order `N`.
    pub fn for_order(order: usize) -> Self {
        let pad = order as i32 + 3;
        SWindow::new(-pad, pad)
    }

    pub fn contains(&self, e: i32) -> bool {
        (self.min..=self.max).contains(&e)
    }
}

/// Laurent series `Σ c_e s^e` in the distinguished variable `s` with
/// coefficients in `R`.
///
/// Exponents above `window.max` are truncated and recorded through
/// `known_to`: coefficients beyond it are unknown and asking for them is an
/// error. An exponent below `window.min` is never dropped; it poisons the
/// value, and every later extraction reports the overflow.
///
/// The same type also carries Laurent polynomials in `b` on the other side
/// of an L₁/L₂ evaluation; the variable name is a matter of display.
#[derive(Clone, Debug)]
pub struct Laurent<R> {
    terms: BTreeMap<i32, R>,
    window: SWindow,
    known_to: Option<i32>,
    underflow: Option<i32>,
}

/// Laurent series in `s` over sparse polynomials.
pub type LaurentInS = Laurent<SparsePoly>;

impl<R: BaseRing> Laurent<R> {
    pub fn zero(window: SWindow) -> Self {
        Laurent {
            terms: BTreeMap::new(),
            window,
            known_to: None,
            underflow: None,
        }
    }

    pub fn monomial(c: R, exponent: i32, window: SWindow) -> Self {
        let mut out = Self::zero(window);
        out.add_term(exponent, c);
        out
    }

    pub fn constant(c: R, window: SWindow) -> Self {
        Self::monomial(c, 0, window)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, R)>, window: SWindow) -> Self {
        let mut out = Self::zero(window);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, e: i32, c: R) {
        if c.vanishes() {
            return;
        }
        if e < self.window.min {
            self.underflow = Some(self.underflow.map_or(e, |u| u.min(e)));
            return;
        }
        if e > self.window.max || self.known_to.is_some_and(|k| e > k) {
            self.known_to = Some(self.known_to.map_or(self.window.max, |k| k.min(self.window.max)));
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().accumulate(&c);
                if o.get().vanishes() {
                    o.remove();
                }
            }
        }
    }

    pub fn window(&self) -> SWindow {
        self.window
    }

    /// Highest exponent whose coefficient is known; `None` means exact.
    pub fn known_to(&self) -> Option<i32> {
        self.known_to
    }

    pub fn is_exact(&self) -> bool {
        self.known_to.is_none()
    }

    pub fn underflow(&self) -> Option<i32> {
        self.underflow
    }

    /// Declares coefficients above `k` unknown, dropping stored ones.
    pub fn with_known_to(mut self, k: i32) -> Self {
        let k = self.known_to.map_or(k, |old| old.min(k));
        self.terms.retain(|&e, _| e <= k);
        self.known_to = Some(k);
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &R)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn valuation(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    fn check(&self) -> Result<(), AlgebraError> {
        match self.underflow {
            Some(e) => Err(AlgebraError::WindowOverflow {
                exponent: e,
                min: self.window.min,
                max: self.window.max,
            }),
            None => Ok(()),
        }
    }

    /// Coefficient of `s^e`.
    pub fn coeff(&self, e: i32) -> Result<R, AlgebraError> {
        self.check()?;
        if let Some(k) = self.known_to {
            if e > k {
                return Err(AlgebraError::InsufficientPrecision { exponent: e, known_to: k });
            }
        }
        Ok(self.terms.get(&e).cloned().unwrap_or_else(R::ring_zero))
    }

    /// All stored terms, after checking for window overflow.
    pub fn checked_terms(&self) -> Result<Vec<(i32, R)>, AlgebraError> {
        self.check()?;
        Ok(self.terms.iter().map(|(&e, c)| (e, c.clone())).collect())
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: i32) -> Self {
        let mut out = Self::zero(self.window);
        out.underflow = self.underflow.map(|u| u + k);
        out.known_to = self.known_to.map(|kt| kt + k);
        if let Some(kt) = out.known_to {
            if kt > self.window.max {
                out.known_to = Some(self.window.max);
            }
        }
        for (&e, c) in &self.terms {
            out.add_term(e + k, c.clone());
        }
        out
    }

    /// d/ds.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.window);
        out.underflow = self.underflow.map(|u| u - 1);
        out.known_to = self.known_to.map(|k| k - 1);
        for (&e, c) in &self.terms {
            if e != 0 {
                out.add_term(e - 1, c.scaled(&Rational::from_integer(e.into())));
            }
        }
        out
    }

    pub fn map_coeffs<S: BaseRing>(&self, f: impl Fn(&R) -> S) -> Laurent<S> {
        let mut out = Laurent::<S>::zero(self.window);
        out.known_to = self.known_to;
        out.underflow = self.underflow;
        for (&e, c) in &self.terms {
            out.add_term(e, f(c));
        }
        out
    }

    /// Multiplies every coefficient by a ring element.
    pub fn mul_coeff(&self, r: &R) -> Self {
        self.map_coeffs(|c| c.times(r))
    }

    pub fn with_window(&self, window: SWindow) -> Self {
        let mut out = Self::zero(window);
        out.known_to = self.known_to;
        out.underflow = self.underflow;
        for (&e, c) in &self.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    /// `(s + x)^e` for the single monomial exponent `e`, expanded as a power
    /// series in `x` to `order`: entry `k` is `C(e, k) s^{e−k}`.
    pub fn translated_power(e: i32, order: usize, window: SWindow) -> Vec<Laurent<Rational>> {
        (0..=order)
            .map(|k| {
                Laurent::<Rational>::monomial(binomial(e as i64, k as u32), e - k as i32, window)
            })
            .collect()
    }

    /// Exact difference test restricted to commonly known exponents.
    pub fn agrees_with(&self, other: &Self) -> Result<bool, AlgebraError> {
        self.check()?;
        other.check()?;
        let limit = match (self.known_to, other.known_to) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(i32::MAX).min(b.unwrap_or(i32::MAX))),
        };
        let diff = self.minus(other);
        Ok(diff
            .terms
            .keys()
            .all(|&e| limit.is_some_and(|l| e > l)))
    }
}

impl<R: BaseRing> PartialEq for Laurent<R> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.known_to == other.known_to && self.underflow == other.underflow
    }
}

impl<R: BaseRing> Ring for Laurent<R> {
    fn zero_like(&self) -> Self {
        Self::zero(self.window)
    }

    fn one_like(&self) -> Self {
        Self::constant(R::ring_one(), self.window)
    }

    /// True only for an exact zero: an unknown tail is not zero.
    fn vanishes(&self) -> bool {
        self.terms.is_empty() && self.known_to.is_none() && self.underflow.is_none()
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.accumulate(other);
        out
    }

    fn accumulate(&mut self, other: &Self) {
        self.underflow = match (self.underflow, other.underflow) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        if let Some(k) = other.known_to {
            self.known_to = Some(self.known_to.map_or(k, |s| s.min(k)));
            let k = self.known_to.unwrap();
            self.terms.retain(|&e, _| e <= k);
        }
        for (&e, c) in &other.terms {
            self.add_term(e, c.clone());
        }
    }

    fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.window);
        out.underflow = match (self.underflow, other.underflow) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        // Unknown tails of one factor pollute the product above
        // known_to + valuation of the other factor.
        // An exactly-zero factor contributes no tail.
        let mut kt: Option<i32> = None;
        let mut bound = |k: Option<i32>, other: &Self| {
            if let Some(k) = k {
                let lim = match (other.valuation(), other.known_to) {
                    (Some(v), _) => k + v,
                    (None, Some(ko)) => k + ko + 1,
                    (None, None) => return,
                };
                kt = Some(kt.map_or(lim, |x: i32| x.min(lim)));
            }
        };
        bound(self.known_to, other);
        bound(other.known_to, self);
        out.known_to = kt.map(|k| k.min(self.window.max));
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1.times(c2));
            }
        }
        out
    }

    fn negated(&self) -> Self {
        self.map_coeffs(|c| c.negated())
    }

    fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            let mut z = self.zero_like();
            z.known_to = self.known_to;
            z.underflow = self.underflow;
            return z;
        }
        self.map_coeffs(|d| d.scaled(c))
    }

    fn to_constant(&self) -> Option<Rational> {
        if self.underflow.is_some() || self.known_to.is_some_and(|k| k < 0) {
            return None;
        }
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).and_then(R::to_constant),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn w() -> SWindow {
        SWindow::new(-4, 4)
    }

    fn q(terms: &[(i32, i64)]) -> Laurent<Rational> {
        Laurent::from_terms(terms.iter().map(|&(e, c)| (e, int(c))), w())
    }

    #[test]
    fn exact_product() {
        let a = q(&[(-1, 1), (1, 2)]);
        let b = q(&[(1, 1), (-1, -1)]);
        let p = a.times(&b);
        assert!(p.is_exact());
        assert_eq!(p, q(&[(0, 1 - 2), (-2, -1), (2, 2)]));
    }

    #[test]
    fn overflow_below_min_is_reported() {
        let a = q(&[(-3, 1)]);
        let p = a.times(&a);
        assert_eq!(
            p.coeff(0),
            Err(AlgebraError::WindowOverflow { exponent: -6, min: -4, max: 4 })
        );
        // the fault propagates through later additions
        let r = p.plus(&q(&[(0, 1)]));
        assert!(r.coeff(0).is_err());
    }

    #[test]
    fn truncation_above_max_is_tracked() {
        let a = q(&[(3, 1), (0, 1)]);
        let p = a.times(&a);
        assert_eq!(p.known_to(), Some(4));
        assert_eq!(p.coeff(3).unwrap(), int(2));
        assert!(matches!(p.coeff(5), Err(AlgebraError::InsufficientPrecision { .. })));
    }

    #[test]
    fn precision_shrinks_with_negative_valuation() {
        // known to s^2, multiplied by s^{-1}: known to s^1
        let a = q(&[(0, 1), (2, 3)]).with_known_to(2);
        let b = q(&[(-1, 1)]);
        let p = a.times(&b);
        assert_eq!(p.known_to(), Some(1));
        assert_eq!(p.coeff(1).unwrap(), int(3));
    }

    #[test]
    fn derivative_and_shift() {
        let a = q(&[(-2, 1), (3, 1)]);
        assert_eq!(a.derivative(), Laurent::from_terms([(-3, int(-2)), (2, int(3))], w()));
        assert_eq!(a.shift(1), q(&[(-1, 1), (4, 1)]));
    }

    #[test]
    fn translated_power_is_geometric_for_inverse() {
        let t = Laurent::<Rational>::translated_power(-1, 2, w());
        assert_eq!(t[0].coeff(-1).unwrap(), int(1));
        assert_eq!(t[1].coeff(-2).unwrap(), int(-1));
        assert_eq!(t[2].coeff(-3).unwrap(), int(1));
        let t2 = Laurent::<Rational>::translated_power(2, 3, w());
        assert_eq!(t2[1].coeff(1).unwrap(), int(2));
        assert!(t2[3].vanishes());
        let _ = rat(1, 2);
    }
}
