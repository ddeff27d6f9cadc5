use thiserror::Error;

use super::poly::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("inner series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("division by x needs a zero constant coefficient (valuation >= 1)")]
    ValuationViolation,
    #[error("series is not invertible: constant term is not a nonzero scalar")]
    NotInvertible,
    #[error("exponent s^{exponent} falls outside the window [{min}, {max}]")]
    WindowOverflow { exponent: i32, min: i32, max: i32 },
    #[error("coefficient of s^{exponent} requested but only known up to s^{known_to}")]
    InsufficientPrecision { exponent: i32, known_to: i32 },
    #[error("jet of order ({have_u}, {have_v}) cannot supply the ({need_u}, {need_v}) partial; rebuild with higher truncation")]
    InsufficientJetOrder {
        need_u: u32,
        need_v: u32,
        have_u: u32,
        have_v: u32,
    },
    #[error("generator {0} is not in the polynomial universe")]
    UnknownGenerator(Var),
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}
