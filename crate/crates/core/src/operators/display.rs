use std::cmp::Reverse;

use num_traits::{One, Signed};

use crate::algebra::{LaurentInS, Rational, Var};

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

fn power(sym: &str, e: u32, bracket: bool) -> String {
    match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ if bracket => format!("({sym}){}", superscript(e)),
        _ => format!("{sym}{}", superscript(e)),
    }
}

/// One term `|c|·s^k ∂_aⁱ ∂_bʲ` without its sign.
fn format_term(c: &Rational, k: i32, i: u32, j: u32, rest: &str) -> String {
    let c = c.abs();
    let num = c.numer().to_string();
    let den = c.denom().to_string();
    let mut top = String::new();
    if k > 0 {
        top.push_str(&power("s", k as u32, false));
    }
    top.push_str(rest);
    top.push_str(&power("∂_a", i, true));
    top.push_str(&power("∂_b", j, true));
    let top = match (top.is_empty(), c.numer().is_one()) {
        (true, _) => num,
        (false, true) => top,
        (false, false) => format!("{num}{top}"),
    };
    let s_den = if k < 0 { power("s", k.unsigned_abs(), false) } else { String::new() };
    match (c.denom().is_one(), s_den.is_empty()) {
        (true, true) => top,
        (true, false) => format!("{top}/{s_den}"),
        (false, true) => format!("{top}/{den}"),
        (false, false) => format!("{top}/({den}{s_den})"),
    }
}

/// Prints an operator coefficient in conventional notation, e.g. `∂_a∂_b/(4s²)`.
///
/// Terms are grouped by descending `∂_a` degree; within a group `∂_b`
/// degrees ascend with the `∂_b`-free term last, then `s` exponents ascend.
pub fn format_coefficient(c: &LaurentInS) -> String {
    let mut terms: Vec<(u32, u32, i32, String, Rational)> = Vec::new();
    for (k, p) in c.terms() {
        for (m, coef) in p.terms() {
            let (exps, rest) = m.split_vars(&[Var::Da, Var::Db]);
            terms.push((exps[0], exps[1], k, rest.to_string(), coef.clone()));
        }
    }
    terms.sort_by_key(|(i, j, k, rest, _)| (Reverse(*i), *j == 0, *j, *k, rest.clone()));
    join_signed(terms.into_iter().map(|(i, j, k, rest, coef)| {
        let rest = if rest == "1" { String::new() } else { rest };
        (coef.is_negative(), format_term(&coef, k, i, j, &rest))
    }))
}

/// Prints a Laurent series in `s` with polynomial coefficients, lowest
/// exponent first.
pub fn format_laurent(c: &LaurentInS) -> String {
    let mut parts = Vec::new();
    for (k, p) in c.terms() {
        for (m, coef) in p.terms() {
            let rest = if m.is_one() { String::new() } else { m.to_string() };
            parts.push((coef.is_negative(), format_term(coef, k, 0, 0, &rest)));
        }
    }
    let mut out = join_signed(parts.into_iter());
    if let Some(kt) = c.known_to() {
        out.push_str(&format!(" + O(s^{})", kt + 1));
    }
    out
}

fn join_signed(parts: impl Iterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (neg, body) in parts {
        if out.is_empty() {
            if neg {
                out.push('−');
            }
        } else {
            out.push_str(if neg { " − " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, Laurent, Monomial, SWindow, SparsePoly};

    #[test]
    fn term_shapes() {
        let w = SWindow::new(-5, 5);
        let mut c = Laurent::zero(w);
        c.add_term(-1, SparsePoly::constant(rat(-1, 2)));
        c.add_term(0, SparsePoly::var(Var::Db).scale(&int(3)));
        c.add_term(2, SparsePoly::term(Monomial::power(Var::Da, 2), rat(1, 7)));
        assert_eq!(format_coefficient(&c), "s²(∂_a)²/7 + 3∂_b − 1/(2s)");
        assert_eq!(format_coefficient(&Laurent::zero(w)), "0");
    }
}
