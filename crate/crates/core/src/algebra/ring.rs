use std::fmt::Debug;

use num_traits::{One, Zero};

use super::Rational;

/// Commutative ring with a rational scalar action.
///
/// Zero and one are produced from an existing element (`zero_like`) because
/// some rings carry context, e.g. the truncation window of a Laurent series.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn constant_like(&self, c: &Rational) -> Self {
        self.one_like().scaled(c)
    }
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
    /// The element as a rational constant, if it is one.
    fn to_constant(&self) -> Option<Rational>;
    fn accumulate(&mut self, other: &Self) {
        *self = self.plus(other);
    }
}

/// A ring whose zero and one need no context.
pub trait BaseRing: Ring {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
    fn to_constant(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
}

impl BaseRing for Rational {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
}
