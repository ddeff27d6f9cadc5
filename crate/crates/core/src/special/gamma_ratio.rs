//! `G(a,b) = Γ(1+a)Γ(1+b)/Γ(a+b)` as a truncated series in zeta symbols.

use crate::algebra::{int, BivariateJet, LaurentInS, Monomial, Rational, SWindow, SparsePoly, Var};

use super::zeta_ring::{gamma_degree, ZetaSymbolRing};
use super::SpecialError;

fn ab_power(pa: u32, qb: u32) -> SparsePoly {
    SparsePoly::term(Monomial::from_pairs([(Var::A, pa), (Var::B, qb)]), int(1))
}

/// Homogeneous degree-`n` part of `log G − log(a+b)`:
/// `(−1)ⁿ ζ_n (aⁿ + bⁿ − (a+b)ⁿ)/n`, with `ζ₁ = γ`.
fn log_part(ring: &ZetaSymbolRing, n: u32) -> SparsePoly {
    let a = SparsePoly::var(Var::A);
    let b = SparsePoly::var(Var::B);
    let shape = ab_power(n, 0).add(&ab_power(0, n)).sub(&a.add(&b).pow(n));
    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    shape.mul(&ring.zeta(n)).scale(&(sign / int(n as i64)))
}

/// `G` through total `(a,b)`-degree `max_degree`.
pub fn gamma_ratio_global(max_degree: u32) -> Result<SparsePoly, SpecialError> {
    let ring = ZetaSymbolRing::new(None);
    let top = max_degree.saturating_sub(1);
    let logs: Vec<SparsePoly> = (0..=top).map(|n| if n == 0 { SparsePoly::zero() } else { log_part(&ring, n) }).collect();
    // exp by degree: n·F_n = Σ_k k·L_k·F_{n−k}
    let mut f = vec![SparsePoly::one()];
    for n in 1..=top as usize {
        let mut acc = SparsePoly::zero();
        for k in 1..=n {
            if logs[k].is_empty() || f[n - k].is_empty() {
                continue;
            }
            acc.add_assign(&logs[k].mul(&f[n - k]).scale(&int(k as i64)));
        }
        f.push(acc.scale(&Rational::new(1.into(), (n as i64).into())));
    }
    let sum = f.iter().fold(SparsePoly::zero(), |acc, p| acc.add(p));
    let g = SparsePoly::var(Var::A).add(&SparsePoly::var(Var::B)).mul(&sum);
    if gamma_degree(&g) != 0 {
        return Err(SpecialError::GammaNotCancelled);
    }
    Ok(g)
}

/// Jet of `G` at `a = −s + u`, `b = s + v`, exact through zeta weight
/// `weight`; entry `(i, j)` is known to `s^{weight+1−i−j}`.
pub fn gamma_ratio_jet(
    order_u: u32,
    order_v: u32,
    window: SWindow,
    weight: u32,
) -> Result<BivariateJet<LaurentInS>, SpecialError> {
    if weight < 2 {
        return Err(SpecialError::WeightTooSmall(weight));
    }
    let cap = weight + 1;
    if window.max < cap as i32 {
        return Err(SpecialError::WindowTooSmall { need: cap as i32, have: window.max });
    }
    let g = gamma_ratio_global(cap)?;
    Ok(BivariateJet::from_ab_poly(&g, true, order_u, order_v, window, Some(cap))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{factorial_q, Ring};

    fn z(n: u32) -> SparsePoly {
        SparsePoly::var(Var::Zeta(n))
    }

    #[test]
    fn low_weight_expansion() {
        let g = gamma_ratio_global(4).unwrap();
        let a = SparsePoly::var(Var::A);
        let b = SparsePoly::var(Var::B);
        let ab = a.mul(&b);
        let s = a.add(&b);
        let expect = s.sub(&z(2).mul(&ab).mul(&s)).add(&z(3).mul(&ab).mul(&s.pow(2)));
        let low = g.truncate_degree(&[Var::A, Var::B], 4);
        assert_eq!(low, expect);
    }

    #[test]
    fn recursion_matches_naive_exponential() {
        let t = 8;
        let ring = ZetaSymbolRing::new(None);
        let l = (1..t).fold(SparsePoly::zero(), |acc, n| acc.add(&log_part(&ring, n)));
        let mut exp = SparsePoly::zero();
        let mut pow = SparsePoly::one();
        for k in 0..t {
            exp = exp.add(&pow.scale(&factorial_q(k).recip()));
            pow = pow.mul(&l).truncate_degree(&[Var::A, Var::B], t);
        }
        let naive = SparsePoly::var(Var::A).add(&SparsePoly::var(Var::B)).mul(&exp);
        let naive = naive.truncate_degree(&[Var::A, Var::B], t);
        assert_eq!(gamma_ratio_global(t).unwrap(), naive);
    }

    #[test]
    fn boundary_and_symmetry() {
        let g = gamma_ratio_global(9).unwrap();
        assert_eq!(g.substitute(Var::B, &SparsePoly::zero()), SparsePoly::var(Var::A));
        let swapped = g.substitute_many(&[(Var::A, SparsePoly::var(Var::B)), (Var::B, SparsePoly::var(Var::A))]);
        assert_eq!(swapped, g);
        assert_eq!(gamma_degree(&g), 0);
    }

    #[test]
    fn jet_reflects_swap_symmetry() {
        // G(a,b) = G(b,a) maps the (u,s) jet entry (i,j) to (j,i) with s → −s.
        let w = SWindow::new(-12, 12);
        let jet = gamma_ratio_jet(3, 3, w, 7).unwrap();
        for i in 0..=3 {
            for j in 0..=3 {
                let lhs = jet.coeff(i, j).unwrap();
                let rhs = jet.coeff(j, i).unwrap();
                for (e, c) in lhs.checked_terms().unwrap() {
                    let sign = if e % 2 == 0 { int(1) } else { int(-1) };
                    assert_eq!(rhs.coeff(e).unwrap(), c.scaled(&sign));
                }
            }
        }
        // (u,v) = (0,0) is the removable point a + b = 0: G vanishes there.
        let c00: LaurentInS = jet.coeff(0, 0).unwrap();
        assert!(c00.checked_terms().unwrap().is_empty());
        assert!(gamma_ratio_jet(1, 1, SWindow::new(-3, 3), 7).is_err());
    }
}
