//! Depth-reduction identities for `ζ({1}^k, 2m̄)`.
//!
//! `P = [x^{k+1} s^{2m−1}](D₁∘G + D₂∘1)` and
//! `ζ({1}^k, 2m̄) = P − Σ_n [z^{2m−2}]E_{2n−3} · ζ({1}^{k+1−2(n−m)}, (2n−1)‾)`
//! with `n = m+1 … m+⌈k/2⌉`.

use thiserror::Error;

use crate::algebra::{BivariateJet, Laurent, Rational, SWindow, SparsePoly, XSeries};
use crate::operators::{apply_with, build_d1, build_d2, FunctionJet, OperatorError, Substitution};
use crate::par::Exec;
use crate::special::euler_polynomial;
use crate::special::gamma_ratio::gamma_ratio_jet;
use crate::special::zeta_ring::{gamma_degree, weights};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("m must be at least 1")]
    ZeroM,
    #[error("truncation too small: {0}")]
    Truncation(String),
    #[error("P contains γ")]
    GammaInP,
    #[error("P is not homogeneous of weight {expected}: found weights {found:?}")]
    Inhomogeneous { expected: u32, found: Vec<u32> },
}

/// One correction term `coeff · ζ({1}^ones, bar‾)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Correction {
    pub n: u32,
    pub coeff: Rational,
    pub ones: u32,
    pub bar: u32,
}

impl Correction {
    /// Signed index for numeric evaluation: `ones` copies of 1, then `−bar`.
    pub fn index(&self) -> Vec<i32> {
        let mut v = vec![1; self.ones as usize];
        v.push(-(self.bar as i32));
        v
    }
}

/// The identity for one `(k, m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction {
    pub k: u32,
    pub m: u32,
    /// Polynomial in zeta symbols.
    pub p: SparsePoly,
    pub corrections: Vec<Correction>,
}

impl Reduction {
    /// Index of the reduced value `ζ({1}^k, 2m̄)`.
    pub fn lhs_index(&self) -> Vec<i32> {
        let mut v = vec![1; self.k as usize];
        v.push(-2 * self.m as i32);
        v
    }

    pub fn weight(&self) -> u32 {
        self.k + 2 * self.m
    }
}

/// The corrections for `(k, m)`; coefficients come from the Euler
/// polynomials.
pub fn corrections(k: u32, m: u32) -> Vec<Correction> {
    (m + 1..=m + k.div_ceil(2))
        .map(|n| Correction {
            n,
            coeff: euler_polynomial(2 * n - 3).coeff(2 * m - 2),
            ones: k + 1 - 2 * (n - m),
            bar: 2 * n - 1,
        })
        .collect()
}

/// Smallest s-window that holds the extraction for `(k, m)`.
pub fn required_window(k: u32, m: u32) -> SWindow {
    let order = k as i32 + 1;
    SWindow::new(-(order + 3), (order + 3).max((k + 2 * m + 1) as i32))
}

/// The coefficient series `D₁∘G + D₂∘1` to x-order `order`, exact through
/// zeta weight `weight`.
pub fn generating_series(order: usize, weight: u32, window: SWindow, exec: Exec) -> Result<XSeries<crate::algebra::LaurentInS>, ReductionError> {
    let d1 = build_d1(order, window).map_err(OperatorError::from)?;
    let d2 = build_d2(order, window).map_err(OperatorError::from)?;
    let (du, dv) = d1.max_degrees(order);
    let g = gamma_ratio_jet(du, dv, window, weight).map_err(OperatorError::from)?;
    let lhs = apply_with(exec, &d1, &FunctionJet::constant(Substitution::AMinusSBS, g))?;
    let (_, d2v) = d2.max_degrees(order);
    let one = BivariateJet::from_laurent_v(&Laurent::constant(SparsePoly::one(), window), d2v);
    let rhs = apply_with(exec, &d2, &FunctionJet::constant(Substitution::BEqS, one))?;
    Ok(lhs.plus(&rhs))
}

pub fn zeta_polynomial(k: u32, m: u32, window: Option<SWindow>, exec: Exec) -> Result<Reduction, ReductionError> {
    if m == 0 {
        return Err(ReductionError::ZeroM);
    }
    let need = required_window(k, m);
    let window = match window {
        Some(w) if w.min > need.min || w.max < need.max => {
            return Err(ReductionError::Truncation(format!(
                "window [{}, {}] must contain [{}, {}]",
                w.min, w.max, need.min, need.max
            )))
        }
        Some(w) => w,
        None => need,
    };
    let order = k as usize + 1;
    let weight = k + 2 * m;
    let series = generating_series(order, weight, window, exec)?;
    let p = series
        .coeff(order)
        .coeff(2 * m as i32 - 1)
        .map_err(OperatorError::from)?;
    if gamma_degree(&p) != 0 {
        return Err(ReductionError::GammaInP);
    }
    let found = weights(&p);
    if found.iter().any(|&w| w != weight) {
        return Err(ReductionError::Inhomogeneous { expected: weight, found });
    }
    Ok(Reduction { k, m, p, corrections: corrections(k, m) })
}
