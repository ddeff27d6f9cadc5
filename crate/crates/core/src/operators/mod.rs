//! Differential operators as x-series with coefficients in
//! `ℚ[s^{±1}, ∂_a, ∂_b]` and a trailing substitution.

mod apply;
mod build;
mod display;
mod l1;
mod laplace;

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, LaurentInS, Rational, Ring, SparsePoly, Var, XSeries};
use crate::special::SpecialError;

pub use apply::{apply, apply_to_laurent, apply_with, FunctionJet};
pub use build::{
    build_d1, build_d1_split, build_d1_with, build_d2, build_d3, build_l2, d1_pre_laplace,
    translation_operator, D1Constants, D1Split,
};
pub use display::{format_coefficient, format_laurent};
pub use l1::{apply_l1, translate_laurent, translate_series};
pub use laplace::{formal_laplace, s_laplace, PreLaplaceSeries};

/// Where the operator's `∂_a`, `∂_b` are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Substitution {
    None,
    /// `b = s`.
    BEqS,
    /// `a = −s, b = s`.
    AMinusSBS,
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Substitution::None => write!(f, "none"),
            Substitution::BEqS => write!(f, "b=s"),
            Substitution::AMinusSBS => write!(f, "a=−s, b=s"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OperatorError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error("operator substitution {op} does not match the target's base point {target}")]
    SubstitutionMismatch { op: Substitution, target: Substitution },
    #[error("operator coefficient contains {0}, which is not ∂_a or ∂_b")]
    StrayGenerator(Var),
    #[error("operators with substitutions {0} and {1} cannot be added")]
    IncompatibleSum(Substitution, Substitution),
}

/// `Σ xⁿ Σ c·s^k ∂_aⁱ ∂_bʲ` followed by a substitution.
///
/// Each x-coefficient is a Laurent series in `s` whose coefficients are
/// polynomials in `∂_a`, `∂_b` only.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorSeries {
    body: XSeries<LaurentInS>,
    substitution: Substitution,
}

impl OperatorSeries {
    pub fn new(body: XSeries<LaurentInS>, substitution: Substitution) -> Self {
        OperatorSeries { body, substitution }
    }

    pub fn body(&self) -> &XSeries<LaurentInS> {
        &self.body
    }

    pub fn substitution(&self) -> Substitution {
        self.substitution
    }

    pub fn order(&self) -> usize {
        self.body.order()
    }

    /// `[xⁿ]` of the operator.
    pub fn coeff(&self, n: usize) -> LaurentInS {
        self.body.coeff(n)
    }

    pub fn plus(&self, other: &Self) -> Result<Self, OperatorError> {
        if self.substitution != other.substitution {
            return Err(OperatorError::IncompatibleSum(self.substitution, other.substitution));
        }
        Ok(OperatorSeries::new(self.body.plus(&other.body), self.substitution))
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        OperatorSeries::new(self.body.scaled(c), self.substitution)
    }

    /// Largest `(∂_a, ∂_b)` degrees appearing at x-orders `0..=n`.
    pub fn max_degrees(&self, n: usize) -> (u32, u32) {
        let mut out = (0, 0);
        for k in 0..=n.min(self.order()) {
            for (_, p) in self.body.coeff(k).terms() {
                out.0 = out.0.max(p.degree(Var::Da));
                out.1 = out.1.max(p.degree(Var::Db));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.body.coeffs().iter().all(|c| c.terms().next().is_none())
    }

    /// Exact equality of the bodies, checking substitution tags.
    pub fn same_as(&self, other: &Self) -> bool {
        self.substitution == other.substitution
            && self.order() == other.order()
            && (0..=self.order()).all(|n| self.coeff(n).minus(&other.coeff(n)).terms().next().is_none())
    }
}

pub(crate) fn derivative_only(p: &SparsePoly) -> Result<(), OperatorError> {
    for v in p.generators() {
        if v != Var::Da && v != Var::Db {
            return Err(OperatorError::StrayGenerator(v));
        }
    }
    Ok(())
}
