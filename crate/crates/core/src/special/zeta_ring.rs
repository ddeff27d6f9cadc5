//! Polynomials in the symbols `ζ₂, ζ₃, …` and `γ`, graded by weight.

use num_traits::{One, Zero};

use crate::algebra::{factorial_q, int, Monomial, Rational, SparsePoly, Var};

use super::numbers::bernoulli;

/// The zeta-symbol ring with an optional weight truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZetaSymbolRing {
    pub max_weight: Option<u32>,
}

impl ZetaSymbolRing {
    pub fn new(max_weight: Option<u32>) -> Self {
        ZetaSymbolRing { max_weight }
    }

    /// The symbol `ζ_n`; `ζ₁` stands for `γ` (the constant term of ψ(1+t)
    /// enters the log-Gamma series in that slot).
    pub fn zeta(&self, n: u32) -> SparsePoly {
        match n {
            1 => SparsePoly::var(Var::EulerGamma),
            _ => SparsePoly::var(Var::Zeta(n)),
        }
    }

    /// Drops every term of weight above the cap.
    pub fn truncate(&self, p: &SparsePoly) -> SparsePoly {
        match self.max_weight {
            None => p.clone(),
            Some(w) => SparsePoly::from_terms(
                p.terms().filter(|(m, _)| monomial_weight(m) <= w).map(|(m, c)| (m.clone(), c.clone())),
            ),
        }
    }
}

/// Weight of a monomial: `ζ_n` counts `n`, `γ` counts 1, other generators 0.
pub fn monomial_weight(m: &Monomial) -> u32 {
    m.pairs()
        .iter()
        .map(|&(v, e)| match v {
            Var::Zeta(n) => n * e,
            Var::EulerGamma => e,
            _ => 0,
        })
        .sum()
}

/// The set of weights present in `p`.
pub fn weights(p: &SparsePoly) -> Vec<u32> {
    let mut w: Vec<u32> = p.terms().map(|(m, _)| monomial_weight(m)).collect();
    w.sort_unstable();
    w.dedup();
    w
}

pub fn gamma_degree(p: &SparsePoly) -> u32 {
    p.degree(Var::EulerGamma)
}

/// `q_k` with `ζ(2k) = q_k ζ(2)^k`.
pub fn even_zeta_ratio(k: u32) -> Rational {
    // ζ(2k) = (−1)^{k+1} B_{2k} 2^{2k} π^{2k} / (2 (2k)!), π² = 6 ζ(2)
    let sign = if k % 2 == 1 { Rational::one() } else { -Rational::one() };
    let two = Rational::from_integer(num_bigint::BigInt::from(2).pow(2 * k));
    let six = Rational::from_integer(num_bigint::BigInt::from(6).pow(k));
    sign * bernoulli(2 * k) * two * six / (int(2) * factorial_q(2 * k))
}

/// `π^{2k}/ζ(2k)`, exact.
pub fn pi_power_over_even_zeta(k: u32) -> Rational {
    let sign = if k % 2 == 1 { Rational::one() } else { -Rational::one() };
    let two = Rational::from_integer(num_bigint::BigInt::from(2).pow(2 * k));
    int(2) * factorial_q(2 * k) / (sign * bernoulli(2 * k) * two)
}

/// Rewrites every `ζ_{2k}` (k ≥ 2) as `q_k ζ₂^k`.
pub fn normalize_even(p: &SparsePoly) -> SparsePoly {
    let subs: Vec<(Var, SparsePoly)> = p
        .generators()
        .into_iter()
        .filter_map(|v| match v {
            Var::Zeta(n) if n >= 4 && n % 2 == 0 => {
                let k = n / 2;
                let z2 = SparsePoly::var(Var::Zeta(2)).pow(k);
                Some((v, z2.scale(&even_zeta_ratio(k))))
            }
            _ => None,
        })
        .collect();
    if subs.is_empty() {
        return p.clone();
    }
    p.substitute_many(&subs)
}

/// Evaluates a zeta polynomial given a numeric value for each symbol.
pub fn instantiate<T>(p: &SparsePoly, value: impl Fn(Var) -> T, from_rational: impl Fn(&Rational) -> T) -> T
where
    T: Clone + std::ops::Add<Output = T> + std::ops::Mul<Output = T>,
{
    let mut acc = from_rational(&Rational::zero());
    for (m, c) in p.terms() {
        let mut t = from_rational(c);
        for &(v, e) in m.pairs() {
            let x = value(v);
            for _ in 0..e {
                t = t * x.clone();
            }
        }
        acc = acc + t;
    }
    acc
}
