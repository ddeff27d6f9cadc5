//! Exact arithmetic kernel.

mod elementary;
mod error;
mod jet;
mod laurent;
mod poly;
mod rational;
mod ring;
mod series;

pub use elementary::{elementary_series, Elementary};
pub use error::AlgebraError;
pub use jet::BivariateJet;
pub use laurent::{Laurent, LaurentInS, SWindow};
pub use poly::{poly_arith, Monomial, PolyOp, SparsePoly, Universe, Var};
pub use rational::{binomial, factorial, factorial_q, int, parse_pq, rat, to_pq, Rational};
pub use ring::{BaseRing, Ring};
pub use series::{series_compose, series_mul, XSeries};

/// Default truncation order in `x`.
pub const DEFAULT_ORDER: usize = 10;
