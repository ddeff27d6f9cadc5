use crate::algebra::{binomial, rat, Laurent, LaurentInS, Ring, XSeries};

/// `φ(b + x)` for a Laurent series in `b`, as an x-series to `order`:
/// `[xᵏ] = Σ_e C(e,k) c_e b^{e−k}`.
pub fn translate_laurent(phi: &LaurentInS, order: usize) -> XSeries<LaurentInS> {
    let window = phi.window();
    let coeffs = (0..=order)
        .map(|k| {
            let mut out = Laurent::zero(window);
            if let Some(kt) = phi.known_to() {
                out = out.with_known_to(kt - k as i32);
            }
            for (e, c) in phi.terms() {
                out.add_term(e - k as i32, c.scale(&binomial(e as i64, k as u32)));
            }
            if let Some(u) = phi.underflow() {
                out.add_term(u - k as i32, crate::algebra::SparsePoly::one());
            }
            out
        })
        .collect();
    XSeries::from_coeffs(coeffs)
}

/// `φ(b + x; x)` for an x-dependent φ: translation convolved with φ's own
/// x-orders.
pub fn translate_series(phi: &XSeries<LaurentInS>) -> XSeries<LaurentInS> {
    let n = phi.order();
    let mut acc = XSeries::zero(phi.zero_coeff(), n);
    for (p, c) in phi.coeffs().iter().enumerate() {
        let t = translate_laurent(c, n - p);
        for (k, tk) in t.coeffs().iter().enumerate() {
            let mut slot = acc.coeff(p + k);
            slot.accumulate(tk);
            acc.set_coeff(p + k, slot);
        }
    }
    acc
}

/// `L₁ ∘ φ = φ(b)/(2b) + φ(b+x)/(2(b+x))`, with `φ` given in `s` and the
/// result a Laurent series in `b`.
pub fn apply_l1(phi: &XSeries<LaurentInS>) -> XSeries<LaurentInS> {
    let half = phi.map(|c| c.shift(-1).scaled(&rat(1, 2)));
    half.plus(&translate_series(&half))
}
