//! Special sequences and series: Euler and Bernoulli numbers, Ψ/Ω, the
//! zeta-symbol ring, the Gamma-ratio jet and the `r_m` coefficients.

pub mod gamma_ratio;
pub mod numbers;
pub mod psi;
pub mod rm;
pub mod zeta_ring;

use thiserror::Error;

use crate::algebra::{AlgebraError, Rational};

pub use gamma_ratio::{gamma_ratio_global, gamma_ratio_jet};
pub use numbers::{bernoulli, euler_at_zero, euler_polynomial, EulerPolynomial};
pub use psi::{psi_omega, PsiOmegaSeries};
pub use rm::{rm_coefficients, rm_expansion, RmExpansion};
pub use zeta_ring::{even_zeta_ratio, normalize_even, ZetaSymbolRing};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("zeta weight {0} is below 2")]
    WeightTooSmall(u32),
    #[error("s-window tops out at {have}, jet needs s^{need}")]
    WindowTooSmall { need: i32, have: i32 },
    #[error("γ survived in the Gamma-ratio exponent")]
    GammaNotCancelled,
    /// Coefficients of `t⁻³` and `t⁻¹`.
    #[error("singular part does not vanish: t^-3 coefficient {}, t^-1 coefficient {}", .0[0], .0[1])]
    SingularPart(Box<[Rational; 2]>),
    #[error("odd-power coefficient w^{0} is nonzero")]
    OddPart(u32),
    #[error("range of m is empty")]
    EmptyRange,
}
