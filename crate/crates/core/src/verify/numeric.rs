//! Numeric checks: the depth-reduction identities against independently
//! evaluated alternating MZVs, the ψ/csc closed form, the generating series
//! of `ζ({1}^{k−1}, (n+1)‾)` and the Gamma identity for `₂F₁` at −1.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{elementary_series, rat, Elementary, Monomial, Rational, SWindow, SparsePoly, Var};
use crate::mzv::{self, bits_for_digits, consts, eval_amzv, guard_digits, Fixed, MZVIndex, MzvError};
use crate::operators::{build_d1, build_d2, format_coefficient, OperatorError};
use crate::par::{self, Exec};
use crate::reduction::{zeta_polynomial, Reduction};
use crate::special::gamma_ratio::gamma_ratio_global;
use crate::special::rm::rm_expansion;
use crate::special::zeta_ring::instantiate;

use super::report::{CheckReport, Mismatch, ReportBuilder};
use super::VerifyError;

/// Printed coefficient of `x³` in D₁.
pub const D1_X3: &str = "∂_a∂_b/(4s²) − ∂_a(∂_b)²/(8s) + ∂_a/(4s³) − (∂_b)²/(4s²) + (∂_b)³/(24s)";

/// Printed `r_1..r_4`.
pub fn printed_rm() -> [Rational; 4] {
    [rat(3, 32), rat(151, 192), rat(3287, 1536), rat(10629, 2560)]
}

/// Digit budget shared by every value in one comparison.
#[derive(Clone, Copy, Debug)]
struct Precision {
    digits: u32,
    bits: u32,
}

impl Precision {
    fn new(digits: u32) -> Result<Self, VerifyError> {
        if digits > mzv::MAX_DIGITS {
            return Err(MzvError::TooManyDigits(digits).into());
        }
        Ok(Precision { digits, bits: bits_for_digits(digits + guard_digits(digits)) })
    }

    fn q(&self, r: &Rational) -> Fixed {
        Fixed::from_rational(r, self.bits)
    }

    fn zeta(&self, n: u32) -> Result<Fixed, VerifyError> {
        Ok(mzv::eval_zeta(n, self.digits)?.value().with_bits(self.bits))
    }

    fn amzv(&self, index: Vec<i32>) -> Result<Fixed, VerifyError> {
        Ok(eval_amzv(&MZVIndex::new(index)?, self.digits)?.value().with_bits(self.bits))
    }

    /// `10^{−(digits−5)}`.
    fn tolerance(&self) -> Fixed {
        let d = self.digits.saturating_sub(5);
        self.q(&Rational::new(BigInt::one(), BigInt::from(10).pow(d)))
    }

    fn within(&self, a: &Fixed, b: &Fixed) -> Option<f64> {
        let r = (a - b).abs();
        (r > self.tolerance()).then(|| r.to_f64())
    }

    /// Evaluates a polynomial in zeta symbols.
    fn instantiate(&self, p: &SparsePoly) -> Result<Fixed, VerifyError> {
        let mut cache = std::collections::BTreeMap::new();
        for v in p.generators() {
            match v {
                Var::Zeta(n) => {
                    cache.insert(n, self.zeta(n)?);
                }
                other => return Err(VerifyError::BadParameter(format!("unexpected symbol {other} in P"))),
            }
        }
        Ok(instantiate(
            p,
            |v| match v {
                Var::Zeta(n) => cache[&n].clone(),
                _ => unreachable!("checked above"),
            },
            |r| self.q(r),
        ))
    }
}

fn numeric_mismatch(x_order: usize, s_exponent: i32, what: String, residual: f64) -> Mismatch {
    Mismatch { x_order, s_exponent, monomial: what, detail: format!("|lhs − rhs| = {residual:.3e}") }
}

fn index_label(index: &[i32]) -> String {
    MZVIndex::new(index.to_vec()).map(|i| i.to_string()).unwrap_or_else(|_| format!("{index:?}"))
}

/// `ζ({1}^k, 2m̄) + Σ coeff·ζ(correction)` evaluated numerically.
fn reduction_lhs(r: &Reduction, prec: &Precision) -> Result<Fixed, VerifyError> {
    let mut lhs = prec.amzv(r.lhs_index())?;
    for c in &r.corrections {
        lhs = &lhs + &(&prec.q(&c.coeff) * &prec.amzv(c.index())?);
    }
    Ok(lhs)
}

/// `|LHS − P|` for an identity, and whether it is within `10^{−(digits−5)}`.
/// `P` may be in either zeta basis.
pub fn reduction_residual(r: &Reduction, digits: u32) -> Result<(f64, bool), VerifyError> {
    let prec = Precision::new(digits)?;
    let (lhs, rhs) = (reduction_lhs(r, &prec)?, prec.instantiate(&r.p)?);
    let within = prec.within(&lhs, &rhs).is_none();
    Ok(((&lhs - &rhs).abs().to_f64(), within))
}

/// `|LHS − P|` for one `(k, m)`.
pub fn corollary_residual(k: u32, m: u32, digits: u32, exec: Exec) -> Result<f64, VerifyError> {
    Ok(reduction_residual(&zeta_polynomial(k, m, None, exec)?, digits)?.0)
}

/// For every `k ≤ k_max`, `1 ≤ m ≤ m_max`: the reduction's `P`, with zeta
/// symbols instantiated, equals the alternating-MZV side. For `k = 0` the
/// value is also compared with `−½[s^{2m−1}](π csc πs − 1/s)`.
pub fn check_corollary_numeric(k_max: u32, m_max: u32, digits: u32, exec: Exec) -> Result<CheckReport, VerifyError> {
    if m_max == 0 || digits < 20 {
        return Err(VerifyError::BadParameter("need m_max ≥ 1 and digits ≥ 20".into()));
    }
    let prec = Precision::new(digits)?;
    let mut report = ReportBuilder::new("corollary_numeric", "depth reduction of ζ({1}^k, 2m̄), numerically");
    let pairs: Vec<(u32, u32)> = (0..=k_max).flat_map(|k| (1..=m_max).map(move |m| (k, m))).collect();
    let outcomes = par::map_slice(exec, &pairs, |&(k, m)| -> Result<Option<Mismatch>, VerifyError> {
        let r = zeta_polynomial(k, m, None, Exec::Sequential)?;
        let lhs = reduction_lhs(&r, &prec)?;
        let rhs = prec.instantiate(&r.p)?;
        Ok(prec
            .within(&lhs, &rhs)
            .map(|res| numeric_mismatch(k as usize + 1, 2 * m as i32 - 1, index_label(&r.lhs_index()), res)))
    });
    for o in outcomes {
        report.record(o?);
    }

    let mut pf = ReportBuilder::new("partial_fraction", "ζ(2m̄) = −½[s^{2m−1}](π csc πs − 1/s)");
    let csc = elementary_series(Elementary::WCscW, 2 * m_max as usize);
    let pi = mzv::pi(digits).value().with_bits(prec.bits);
    for m in 1..=m_max {
        let p = 2 * m;
        let oracle = &prec.q(&(csc.coeff(p as usize) * rat(-1, 2))) * &pi.powi(p);
        let value = prec.amzv(vec![-(p as i32)])?;
        pf.record(prec.within(&value, &oracle).map(|res| numeric_mismatch(1, p as i32 - 1, format!("ζ({p}̄)"), res)));
    }
    report.child(pf.finish());
    Ok(report
        .param("k_max", k_max as u64)
        .param("m_max", m_max as u64)
        .param("digits", digits as u64)
        .finish())
}

/// Truncated Laurent series in `s` with numeric coefficients, exponents
/// `lo..=HI`.
#[derive(Clone, Debug)]
struct NumLaurent {
    lo: i32,
    c: Vec<Fixed>,
}

impl NumLaurent {
    fn new(lo: i32, hi: i32, f: impl Fn(i32) -> Fixed) -> Self {
        NumLaurent { lo, c: (lo..=hi).map(f).collect() }
    }

    fn hi(&self) -> i32 {
        self.lo + self.c.len() as i32 - 1
    }

    fn coeff(&self, e: i32, bits: u32) -> Fixed {
        if e < self.lo || e > self.hi() {
            return Fixed::zero(bits);
        }
        self.c[(e - self.lo) as usize].clone()
    }

    fn add(&self, o: &NumLaurent, bits: u32) -> NumLaurent {
        let lo = self.lo.min(o.lo);
        let hi = self.hi().min(o.hi());
        NumLaurent::new(lo, hi, |e| &self.coeff(e, bits) + &o.coeff(e, bits))
    }

    fn mul(&self, o: &NumLaurent, bits: u32) -> NumLaurent {
        let lo = self.lo + o.lo;
        let hi = (self.hi() + o.lo).min(o.hi() + self.lo);
        NumLaurent::new(lo, hi, |e| {
            (self.lo..=self.hi()).fold(Fixed::zero(bits), |acc, i| &acc + &(&self.coeff(i, bits) * &o.coeff(e - i, bits)))
        })
    }

    fn scale(&self, q: &Fixed) -> NumLaurent {
        NumLaurent { lo: self.lo, c: self.c.iter().map(|x| x * q).collect() }
    }
}

/// `−1/(4s³) + C/(4s²) + π²C/24 + C·A/(4s) − C·A·B/4 − C·B/(4s)` with
/// `C = π csc πs`, `A = ψ(1−s)+γ`, `B = ψ(1+s)+γ`, through `s^hi`.
fn example_closed_form(hi: i32, prec: &Precision) -> Result<NumLaurent, VerifyError> {
    let bits = prec.bits;
    let span = (hi + 6) as usize;
    let pi = mzv::pi(prec.digits).value().with_bits(bits);
    let wcsc = elementary_series(Elementary::WCscW, span + 1);
    let csc = NumLaurent::new(-1, hi + 4, |e| &prec.q(&wcsc.coeff((e + 1) as usize)) * &pi.powi((e + 1) as u32));
    let zetas: Vec<Fixed> =
        (0..=span as u32 + 1).map(|n| if n < 2 { Ok(Fixed::zero(bits)) } else { prec.zeta(n) }).collect::<Result<_, _>>()?;
    // ψ(1+s)+γ = Σ_{n≥2} (−1)ⁿ ζ(n) s^{n−1}
    let b = NumLaurent::new(0, hi + 4, |e| {
        let n = (e + 1) as usize;
        if n.is_multiple_of(2) { zetas[n].clone() } else { -&zetas[n] }
    });
    let a = NumLaurent::new(0, hi + 4, |e| -&zetas[(e + 1) as usize]);
    let q = |r: Rational| prec.q(&r);
    let mono = |e: i32, c: Rational| NumLaurent::new(e, hi + 4, |k| if k == e { q(c.clone()) } else { Fixed::zero(bits) });
    let pi2 = pi.powi(2);
    let mut out = mono(-3, rat(-1, 4));
    out = out.add(&csc.mul(&mono(-2, rat(1, 4)), bits), bits);
    out = out.add(&csc.scale(&(&pi2 * &q(rat(1, 24)))), bits);
    out = out.add(&csc.mul(&a, bits).mul(&mono(-1, rat(1, 4)), bits), bits);
    out = out.add(&csc.mul(&a, bits).mul(&b, bits).scale(&q(rat(-1, 4))), bits);
    out = out.add(&csc.mul(&b, bits).mul(&mono(-1, rat(-1, 4)), bits), bits);
    Ok(out)
}

/// The printed `[x³]D₁`, the printed `r_m` with vanishing singular part, and
/// the ψ/csc closed form of `Σ {ζ(1,1,2m̄) − (2m−1)/2 ζ(1,(2m+1)‾)} s^{2m−1}`
/// for `m ≤ 3`, against both `P(2, m)` and the alternating MZVs.
pub fn check_example_and_rm(digits: u32, exec: Exec) -> Result<CheckReport, VerifyError> {
    if digits < 25 {
        return Err(VerifyError::BadParameter("digits must be at least 25".into()));
    }
    let prec = Precision::new(digits)?;
    let mut report = ReportBuilder::new("example_and_rm", "ζ(1,1,2m̄) worked example and r_m");

    let mut op = ReportBuilder::new("d1_x3", "printed [x³]D₁");
    let d1 = build_d1(3, SWindow::for_order(3)).map_err(OperatorError::from)?;
    let printed = format_coefficient(&d1.coeff(3));
    if printed != D1_X3 {
        op.record(Some(Mismatch { x_order: 3, s_exponent: 0, monomial: String::new(), detail: printed }));
    }
    report.child(op.finish());

    let mut rm = ReportBuilder::new("rm", "r_1..r_4 and vanishing singular part");
    match rm_expansion(4) {
        Ok(e) => {
            for (m, (got, want)) in e.r.iter().zip(printed_rm()).enumerate() {
                if *got != want {
                    rm.record(Some(Mismatch {
                        x_order: 0,
                        s_exponent: 2 * m as i32 + 1,
                        monomial: format!("r_{}", m + 1),
                        detail: format!("got {got}, printed {want}"),
                    }));
                }
            }
        }
        Err(e) => rm.record(Some(Mismatch { x_order: 0, s_exponent: -3, monomial: String::new(), detail: e.to_string() })),
    }
    report.child(rm.finish());

    let mut cf = ReportBuilder::new("closed_form", "ψ/csc closed form for k = 2");
    let m_max = 3u32;
    let closed = example_closed_form(2 * m_max as i32 - 1, &prec)?;
    for e in [-3, -2, -1, 0] {
        cf.record(prec.within(&closed.coeff(e, prec.bits), &Fixed::zero(prec.bits)).map(|res| {
            numeric_mismatch(3, e, "singular part".into(), res)
        }));
    }
    for m in 1..=m_max {
        let e = 2 * m as i32 - 1;
        let r = zeta_polynomial(2, m, None, exec)?;
        let lhs = reduction_lhs(&r, &prec)?;
        let c = closed.coeff(e, prec.bits);
        cf.record(prec.within(&lhs, &c).map(|res| numeric_mismatch(3, e, index_label(&r.lhs_index()), res)));
        cf.record(prec.within(&prec.instantiate(&r.p)?, &c).map(|res| numeric_mismatch(3, e, "P".into(), res)));
    }
    report.child(cf.finish());

    let mut d2 = ReportBuilder::new("d2_channel", "[x³](D₂∘1) = −1/(4s³)");
    let d2op = build_d2(3, SWindow::for_order(3)).map_err(OperatorError::from)?;
    let c = d2op.coeff(3).coeff(-3).map_err(OperatorError::from)?.coefficient(&Monomial::one());
    if c != rat(-1, 4) {
        d2.record(Some(Mismatch { x_order: 3, s_exponent: -3, monomial: "1".into(), detail: format!("got {c}") }));
    }
    report.child(d2.finish());
    Ok(report.param("digits", digits as u64).finish())
}

/// Coefficients `[xᵏ sⁿ]` (`k, n ≤ deg`) of `1 − 2^{−x}₂F₁(x, 1; 1−s; ½)`,
/// i.e. of `1 − ₂F₁(x, −s; 1−s; −1)`, by bivariate series arithmetic.
fn generating_coefficients(deg: usize, prec: &Precision) -> Vec<Vec<Fixed>> {
    let bits = prec.bits;
    let zero = || vec![vec![Fixed::zero(bits); deg + 1]; deg + 1];
    let mut t = zero();
    t[0][0] = Fixed::from_int(1, bits);
    let mut sum = t.clone();
    let terms = (prec.digits + guard_digits(prec.digits)) as usize * 10 / 3 + 40;
    for j in 1..=terms {
        // t ← t·(x + j − 1)/(j − s)
        let mut lin = zero();
        for k in 0..=deg {
            for n in 0..=deg {
                let mut v = t[k][n].mul_int(j as i64 - 1);
                if k > 0 {
                    v = &v + &t[k - 1][n];
                }
                lin[k][n] = v;
            }
        }
        let inv: Vec<Fixed> = (0..=deg)
            .map(|n| Fixed::from_int(1, bits).div_bigint(&BigInt::from(j).pow(n as u32 + 1)))
            .collect();
        let mut next = zero();
        for k in 0..=deg {
            for n in 0..=deg {
                next[k][n] = (0..=n).fold(Fixed::zero(bits), |acc, i| &acc + &(&lin[k][i] * &inv[n - i]));
            }
        }
        t = next;
        for k in 0..=deg {
            for n in 0..=deg {
                sum[k][n] = &sum[k][n] + &t[k][n].shl(-(j as i32));
            }
        }
    }
    // 2^{−x} = Σ (−ln 2)ᵏ xᵏ/k!
    let ln2 = consts::ln2(bits);
    let mut e = vec![Fixed::from_int(1, bits)];
    for k in 1..=deg {
        e.push((&e[k - 1] * &ln2).div_int(-(k as i64)));
    }
    let mut g = zero();
    for k in 0..=deg {
        for n in 0..=deg {
            let v = (0..=k).fold(Fixed::zero(bits), |acc, i| &acc + &(&e[i] * &sum[k - i][n]));
            g[k][n] = -&v;
        }
    }
    g[0][0] = &g[0][0] + &Fixed::from_int(1, bits);
    g
}

/// `Σ_{k,n>0} ζ({1}^{k−1}, (n+1)‾) xᵏ sⁿ = 1 − ₂F₁(x, −s; 1−s; −1)` for
/// `k, n ≤ 3`, and the Gamma identity for `₂F₁` at −1 at `(a, b) = (3/10, 1/2)`.
pub fn check_hypergeometric(digits: u32) -> Result<CheckReport, VerifyError> {
    let prec = Precision::new(digits)?;
    let mut report = ReportBuilder::new("hypergeometric", "₂F₁ at −1: generating series and Gamma identity");

    let mut gs = ReportBuilder::new("generating_series", "Σ ζ({1}^{k−1}, (n+1)‾) xᵏ sⁿ = 1 − ₂F₁(x, −s; 1−s; −1)");
    let deg = 3;
    let g = generating_coefficients(deg, &prec);
    for (k, row) in g.iter().enumerate() {
        for (n, value) in row.iter().enumerate() {
            let label;
            let want = if k == 0 || n == 0 {
                label = "0".to_string();
                Fixed::zero(prec.bits)
            } else {
                let mut idx = vec![1; k - 1];
                idx.push(-(n as i32 + 1));
                label = index_label(&idx);
                prec.amzv(idx)?
            };
            gs.record(prec.within(value, &want).map(|res| numeric_mismatch(k, n as i32, label, res)));
        }
    }
    report.child(gs.finish());

    let mut gi = ReportBuilder::new("gamma_identity", "b·₂F₁(a,a+b;a+1;−1) + a·₂F₁(b,a+b;b+1;−1) = Γ(1+a)Γ(1+b)/Γ(a+b)");
    let (a, b) = (rat(3, 10), rat(1, 2));
    let one = Rational::one();
    let f = |p: &Rational, q: &Rational, r: &Rational| -> Result<Fixed, VerifyError> {
        Ok(mzv::eval_2f1_at_minus1(p, q, r, digits)?.value().with_bits(prec.bits))
    };
    let ab = &a + &b;
    let lhs = &(&prec.q(&b) * &f(&a, &ab, &(&a + &one))?) + &(&prec.q(&a) * &f(&b, &ab, &(&b + &one))?);
    let gamma = |z: Rational| -> Result<Fixed, VerifyError> { Ok(mzv::eval_gamma(&z, digits)?.value().with_bits(prec.bits)) };
    let rhs = (&gamma(&one + &a)? * &gamma(&one + &b)?).div(&gamma(ab)?);
    gi.record(prec.within(&lhs, &rhs).map(|res| numeric_mismatch(0, 0, "(a, b) = (3/10, 1/2)".into(), res)));
    report.child(gi.finish());

    let mut gr = ReportBuilder::new("gamma_ratio", "Γ(1+a)Γ(1+b)/Γ(a+b) series at (a, b) = (1/50, 1/25)");
    let (a, b) = (rat(1, 50), rat(1, 25));
    let degree = digits / 2 + 6;
    let series = gamma_ratio_global(degree)?;
    let mut zetas = std::collections::BTreeMap::new();
    for v in series.generators() {
        if let Var::Zeta(n) = v {
            zetas.insert(n, prec.zeta(n)?);
        }
    }
    let value = instantiate(
        &series,
        |v| match v {
            Var::A => prec.q(&a),
            Var::B => prec.q(&b),
            Var::Zeta(n) => zetas[&n].clone(),
            other => panic!("unexpected symbol {other}"),
        },
        |r| prec.q(r),
    );
    let direct = (&gamma(&one + &a)? * &gamma(&one + &b)?).div(&gamma(&a + &b)?);
    gr.record(prec.within(&value, &direct).map(|res| numeric_mismatch(0, 0, format!("degree {degree}"), res)));
    report.child(gr.finish());

    Ok(report.param("digits", digits as u64).finish())
}
