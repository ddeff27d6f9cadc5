//! Euler-polynomial resummation of `L₂ ∘ (g(x,−b)+g(x,b))/(2b)`, checked
//! over free symbols `Z(k,n) = [xᵏyⁿ] g` so that only the re-indexing of
//! the sums is tested.

use crate::algebra::{int, Laurent, LaurentInS, Monomial, SWindow, SparsePoly, Var, XSeries};
use crate::operators::{apply_to_laurent, build_l2};
use crate::reduction::corrections;
use crate::special::euler_polynomial;

use super::report::{compare_series, CheckReport, ReportBuilder};
use super::VerifyError;

fn z(k: u32, n: u32) -> SparsePoly {
    SparsePoly::var(Var::Z(k, n))
}

/// Keeps exponents `≤ cap` only.
fn cap_s(s: &XSeries<LaurentInS>, cap: i32) -> XSeries<LaurentInS> {
    s.map(|c| c.clone().with_known_to(cap))
}

pub fn check_prop_resummation(order: usize) -> Result<CheckReport, VerifyError> {
    if order < 2 {
        return Err(VerifyError::BadParameter(format!("resummation needs order ≥ 2, got {order}")));
    }
    let mut report = ReportBuilder::new("prop_resummation", "Euler-polynomial resummation over free symbols")
        .param("order", order as u64);
    let n_max = order as u32;
    let s_cap = order as i32;
    // g-terms past s^{cap+order} cannot reach s^{cap} after ∂_bⁱ, i ≤ order.
    let y_max = (s_cap + order as i32 + 1) as u32;
    let w = SWindow::new(-(order as i32 + 4), y_max as i32 + 2);

    let mut neg_g = vec![Laurent::zero(w); order + 1];
    let mut even = vec![Laurent::zero(w); order + 1];
    for k in 1..=n_max {
        for n in 1..=y_max {
            let sign = if n % 2 == 0 { int(-1) } else { int(1) };
            neg_g[k as usize].add_term(n as i32, z(k, n).scale(&sign));
            if n % 2 == 0 {
                even[k as usize].add_term(n as i32 - 1, z(k, n));
            }
        }
    }
    let l2 = build_l2(order, w);
    let rhs = XSeries::from_coeffs(neg_g).plus(&apply_to_laurent(&l2, &XSeries::from_coeffs(even))?);

    let mut lhs = vec![Laurent::zero(w); order + 1];
    for k in 0..n_max {
        for m in 1..=((s_cap + 1) / 2) as u32 {
            let mut c = z(k + 1, 2 * m - 1);
            for corr in corrections(k, m) {
                c = c.add(&z(corr.ones + 1, corr.bar - 1).scale(&corr.coeff));
            }
            lhs[k as usize + 1].add_term(2 * m as i32 - 1, c);
        }
    }
    let lhs = XSeries::from_coeffs(lhs);
    report.record(compare_series(&cap_s(&lhs, s_cap), &cap_s(&rhs, s_cap)));

    let mut channel = ReportBuilder::new("euler_channel", "L₂ ∘ bᴺ = s·xᴺ·E_N(s/x)");
    for big_n in 0..=n_max {
        let l2n = build_l2(big_n as usize, w);
        let target = XSeries::constant(Laurent::monomial(SparsePoly::one(), big_n as i32, w), big_n as usize);
        let got = apply_to_laurent(&l2n, &target)?;
        let e = euler_polynomial(big_n);
        let expect = XSeries::from_coeffs(
            (0..=big_n)
                .map(|i| {
                    let c = e.coeff(big_n - i);
                    Laurent::monomial(SparsePoly::term(Monomial::one(), c), (big_n - i) as i32 + 1, w)
                })
                .collect(),
        );
        channel.record(compare_series(&got, &expect));
    }
    report.child(channel.finish());
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resummation_low_order() {
        let r = check_prop_resummation(5).unwrap();
        assert!(r.passed(), "{:?} {:?}", r.first_mismatch, r.children);
        assert!(check_prop_resummation(1).is_err());
    }
}
