//! Exact formal differential-operator calculus for the alternating multiple
//! zeta values ζ({1}^k, 2m̄), with an independent high-precision numerics
//! layer used as an oracle.
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`]: rationals, sparse polynomials, Laurent polynomials in `s`,
//!   truncated power series in `x`, bivariate jets and elementary series.
//! * [`special`]: Euler polynomials, Bernoulli numbers, the Ψ/Ω series,
//!   the zeta-symbol ring, the Gamma-ratio jet and the `r_m` coefficients.
//! * [`operators`]: formal Laplace transform, the operators D₁, D₂, D₃,
//!   L₁, L₂, and their action on function jets.
//! * [`reduction`]: extraction of the explicit depth-reduction identities.
//! * [`mzv`]: fixed-point high-precision numerics (alternating MZVs, ζ, Γ,
//!   ψ, ₂F₁ at −1).
//! * [`verify`]: one executable check per identity, producing
//!   [`verify::CheckReport`]s.

pub mod algebra;
pub mod mzv;
pub mod operators;
pub mod par;
pub mod reduction;
pub mod special;
pub mod verify;

pub use algebra::{
    BivariateJet, Laurent, LaurentInS, Rational, Ring, SWindow, SparsePoly, Var, XSeries,
};
pub use operators::{OperatorSeries, Substitution};
