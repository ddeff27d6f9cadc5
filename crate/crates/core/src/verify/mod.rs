//! One executable check per identity. Every check returns a [`CheckReport`]
//! carrying its parameters, status and the first mismatching term.

mod generic;
mod goal;
mod lemmas;
mod numeric;
mod report;
mod resum;
mod theorem;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::mzv::MzvError;
use crate::operators::OperatorError;
use crate::reduction::ReductionError;
use crate::special::SpecialError;

pub use generic::GenericFunction;
pub use goal::check_goal_identity;
pub use lemmas::{check_lemma_suite, LemmaConfig};
pub use numeric::{
    check_corollary_numeric, check_example_and_rm, check_hypergeometric, corollary_residual, printed_rm, reduction_residual, D1_X3,
};
pub use report::{compare_series, CheckReport, Mismatch, Status};
pub use resum::check_prop_resummation;
pub use theorem::{check_main_theorem, check_main_theorem_with};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Mzv(#[from] MzvError),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}
