//! The five commands. Each writes its output and returns whether every
//! check it ran passed.

use std::io::Write;

use zetaops::algebra::{factorial_q, to_pq, LaurentInS, Rational, SWindow, Var};
use zetaops::mzv::{eval_amzv, MZVIndex, MzvError};
use zetaops::operators::{build_d1, build_d2, build_d3, build_l2, format_coefficient};
use zetaops::par::Exec;
use zetaops::reduction::{zeta_polynomial, ReductionError};
use zetaops::special::{normalize_even, rm_expansion};
use zetaops::verify::{
    check_corollary_numeric, check_example_and_rm, check_goal_identity, check_hypergeometric, check_lemma_suite,
    check_main_theorem, check_prop_resummation, reduction_residual, CheckReport, LemmaConfig, VerifyError,
};

use crate::config::{Format, RunConfig};
use crate::emit::{report_lines, IdentityRecord};
use crate::{CliError, Which};

const DEFAULT_ORDER: usize = 8;
const DEFAULT_DEGREE: u32 = 8;

fn failure(e: impl std::fmt::Display) -> CliError {
    CliError::Failure(e.to_string())
}

fn verify_error(e: VerifyError) -> CliError {
    match e {
        VerifyError::BadParameter(m) => CliError::Usage(m),
        VerifyError::Mzv(MzvError::TooManyDigits(d)) => CliError::Usage(format!("too many digits: {d}")),
        other => failure(other),
    }
}

fn emit_reports(reports: &[CheckReport], format: Format, out: &mut dyn Write) -> Result<bool, CliError> {
    for line in report_lines(reports, format) {
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(reports.iter().all(CheckReport::passed))
}

/// Runs the selected suite, streaming one report per check.
pub fn verify(cfg: &RunConfig, out: &mut dyn Write) -> Result<bool, CliError> {
    let order = cfg.order.unwrap_or(DEFAULT_ORDER);
    let degree = cfg.degree.unwrap_or(DEFAULT_DEGREE);
    if cfg.suite.symbolic() && order < 2 {
        return Err(CliError::Usage("--order must be at least 2 for the symbolic checks".into()));
    }
    if cfg.suite.numeric() && cfg.digits < 25 {
        return Err(CliError::Usage("--digits must be at least 25 for the numeric checks".into()));
    }
    let exec = Exec::default();
    let streamed = cfg.format != Format::Latex;
    let mut all = Vec::new();
    let mut ok = true;
    let mut push = |r: Vec<CheckReport>, out: &mut dyn Write| -> Result<(), CliError> {
        if streamed {
            ok &= emit_reports(&r, cfg.format, out)?;
        }
        all.extend(r);
        Ok(())
    };
    if cfg.suite.symbolic() {
        push(vec![check_main_theorem(order, degree, exec).map_err(verify_error)?], out)?;
        push(vec![check_goal_identity(order, degree, exec).map_err(verify_error)?], out)?;
        push(vec![check_prop_resummation(order).map_err(verify_error)?], out)?;
        let lemma = LemmaConfig { order, trials: cfg.trials, seed: cfg.seed };
        push(check_lemma_suite(&lemma, exec).map_err(verify_error)?, out)?;
    }
    if cfg.suite.numeric() {
        push(vec![check_corollary_numeric(cfg.kmax, cfg.mmax, cfg.digits, exec).map_err(verify_error)?], out)?;
        push(vec![check_example_and_rm(cfg.digits, exec).map_err(verify_error)?], out)?;
        push(vec![check_hypergeometric(cfg.digits).map_err(verify_error)?], out)?;
    }
    if streamed {
        Ok(ok)
    } else {
        emit_reports(&all, cfg.format, out)
    }
}

/// Extracts, validates numerically, and emits the identity for `(k, m)`.
pub fn reduce(k: u32, m: u32, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool, CliError> {
    if m == 0 {
        return Err(CliError::Usage("--m must be at least 1".into()));
    }
    if let Some(n) = cfg.order {
        if n < k as usize + 1 {
            return Err(CliError::Usage(format!("insufficient truncation: --order {n} < k+1 = {}", k + 1)));
        }
    }
    if let Some(w) = cfg.weight {
        if w < k + 2 * m {
            return Err(CliError::Usage(format!("insufficient truncation: --weight {w} < k+2m = {}", k + 2 * m)));
        }
    }
    let window = cfg.window.map(|w| SWindow::new(-w, w));
    let mut r = zeta_polynomial(k, m, window, Exec::default()).map_err(|e| match e {
        ReductionError::Truncation(msg) => CliError::Usage(format!("insufficient truncation: {msg}")),
        other => failure(other),
    })?;
    if cfg.normalize_even {
        r.p = normalize_even(&r.p);
    }
    let (residual, within) = reduction_residual(&r, cfg.digits).map_err(verify_error)?;
    if !within {
        return Err(CliError::Failure(format!(
            "numeric residual {residual:.3e} exceeds 1e-{}; record withheld",
            cfg.digits.saturating_sub(5)
        )));
    }
    let used = window.unwrap_or_else(|| zetaops::reduction::required_window(k, m));
    let mut echo = cfg.echo();
    echo.insert("order".into(), (k + 1).into());
    echo.insert("weight".into(), (k + 2 * m).into());
    echo.insert("window".into(), serde_json::json!([used.min, used.max]));
    let rec = IdentityRecord::new(r, residual, echo)?;
    let text = match cfg.format {
        Format::Json => rec.to_json(),
        Format::Text => rec.to_text(),
        Format::Latex => rec.to_latex(),
    };
    writeln!(out, "{text}")?;
    Ok(true)
}

pub fn rm(max: u32, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool, CliError> {
    if max == 0 {
        return Err(CliError::Usage("--max must be at least 1".into()));
    }
    let e = rm_expansion(max).map_err(failure)?;
    match cfg.format {
        Format::Json => {
            let values: Vec<_> = e
                .r
                .iter()
                .enumerate()
                .map(|(i, r)| serde_json::json!({"m": i + 1, "r": to_pq(r)}))
                .collect();
            writeln!(out, "{}", serde_json::json!({ "r": values }))?;
        }
        Format::Text => {
            for (i, r) in e.r.iter().enumerate() {
                writeln!(out, "r_{} = {r}", i + 1)?;
            }
        }
        Format::Latex => {
            for (i, r) in e.r.iter().enumerate() {
                writeln!(out, "r_{{{}}} = {}", i + 1, latex_rational(r))?;
            }
        }
    }
    Ok(true)
}

pub fn eval(index: &str, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool, CliError> {
    let idx: MZVIndex = index.parse().map_err(|e: MzvError| CliError::Usage(format!("index {index:?}: {e}")))?;
    let v = eval_amzv(&idx, cfg.digits).map_err(|e| match e {
        MzvError::Unsupported(_) | MzvError::TooManyDigits(_) => CliError::Usage(e.to_string()),
        other => failure(other),
    })?;
    match cfg.format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::json!({"digits": cfg.digits, "index": index, "value": v.to_string()})
        )?,
        Format::Text => writeln!(out, "{v}")?,
        Format::Latex => writeln!(out, "{} = {v}", latex_index(&idx))?,
    }
    Ok(true)
}

fn latex_index(idx: &MZVIndex) -> String {
    let parts: Vec<String> = idx
        .entries()
        .iter()
        .map(|&e| if e < 0 { format!("\\overline{{{}}}", -e) } else { e.to_string() })
        .collect();
    format!("\\zeta({})", parts.join(","))
}

fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

fn latex_operator(c: &LaurentInS) -> String {
    let mut parts = Vec::new();
    for (k, p) in c.terms() {
        for (m, coef) in p.terms() {
            let mut body = String::new();
            for (v, name) in [(Var::Da, "\\partial_a"), (Var::Db, "\\partial_b")] {
                match m.exponent(v) {
                    0 => {}
                    1 => body.push_str(name),
                    e => body.push_str(&format!("{name}^{{{e}}}")),
                }
            }
            if k != 0 {
                body.push_str(&format!("s^{{{k}}}"));
            }
            parts.push(format!("{} {body}", latex_rational(coef)).trim().to_string());
        }
    }
    if parts.is_empty() {
        return "0".into();
    }
    parts.join(" + ").replace("+ -", "- ")
}

/// `[x^N]` of the chosen operator, `N = --order` (default 3).
pub fn operator(which: Which, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool, CliError> {
    let n = cfg.order.unwrap_or(3);
    let w = match cfg.window {
        Some(w) => SWindow::new(-w, w),
        None => SWindow::for_order(n),
    };
    let (name, coefficient, latex) = match which {
        Which::L1 => {
            // [xᴺ]L₁ = (1/N!)∂_bᴺ∘(1/(2b)) at b = s, plus 1/(2b) at N = 0
            let denom = factorial_q(n as u32) * Rational::from_integer(2.into());
            let text = match n {
                0 => "1/s".to_string(),
                1 => "∂_b/2 ∘ 1/b, b = s".to_string(),
                _ => format!("(∂_b)^{n}/{denom} ∘ 1/b, b = s"),
            };
            let latex = if n == 0 {
                "\\frac{1}{s}".to_string()
            } else {
                format!("\\frac{{1}}{{{denom}}} \\partial_b^{{{n}}} \\circ \\frac{{1}}{{b}} \\Big|_{{b=s}}")
            };
            ("l1", text, latex)
        }
        _ => {
            let op = match which {
                Which::D1 => build_d1(n, w),
                Which::D2 => build_d2(n, w),
                Which::D3 => build_d3(n, w),
                _ => Ok(build_l2(n, w)),
            }
            .map_err(failure)?;
            let c = op.coeff(n);
            if c.underflow().is_some() {
                return Err(CliError::Usage(format!("--window too small for order {n}")));
            }
            let name = match which {
                Which::D1 => "d1",
                Which::D2 => "d2",
                Which::D3 => "d3",
                _ => "l2",
            };
            (name, format_coefficient(&c), latex_operator(&c))
        }
    };
    match cfg.format {
        Format::Text => writeln!(out, "{coefficient}")?,
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::json!({"coefficient": coefficient, "operator": name, "order": n})
        )?,
        Format::Latex => writeln!(out, "[x^{{{n}}}] = {latex}")?,
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Settings;

    fn cfg(f: impl FnOnce(&mut Settings)) -> RunConfig {
        let mut s = Settings::default();
        f(&mut s);
        RunConfig::resolve(s).unwrap()
    }

    fn capture(f: impl FnOnce(&mut Vec<u8>) -> Result<bool, CliError>) -> (Result<bool, CliError>, String) {
        let mut buf = Vec::new();
        let r = f(&mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn operator_text() {
        let c = cfg(|s| s.order = Some(3));
        let (r, out) = capture(|o| operator(Which::D1, &c, o));
        assert!(r.unwrap());
        assert_eq!(out.trim_end(), zetaops::verify::D1_X3);
        let (_, out) = capture(|o| operator(Which::D2, &c, o));
        assert!(out.trim_end().ends_with("− 1/(4s³)"), "{out}");
        let (_, out) = capture(|o| operator(Which::L1, &c, o));
        assert_eq!(out.trim_end(), "(∂_b)^3/12 ∘ 1/b, b = s");
    }

    #[test]
    fn rm_and_eval() {
        let c = cfg(|_| {});
        let (_, out) = capture(|o| rm(4, &c, o));
        assert_eq!(out, "r_1 = 3/32\nr_2 = 151/192\nr_3 = 3287/1536\nr_4 = 10629/2560\n");
        let (_, out) = capture(|o| eval("1,-2", &c, o));
        assert!(out.starts_with("0.150257112894949285674967"), "{out}");
        let (r, _) = capture(|o| eval("1", &c, o));
        assert_eq!(r.unwrap_err().exit_code(), 2);
    }

    #[test]
    fn reduce_rejects_small_truncations() {
        let c = cfg(|s| s.order = Some(1));
        assert_eq!(capture(|o| reduce(2, 1, &c, o)).0.unwrap_err().exit_code(), 2);
        let c = cfg(|s| s.window = Some(2));
        assert_eq!(capture(|o| reduce(2, 2, &c, o)).0.unwrap_err().exit_code(), 2);
        let c = cfg(|_| {});
        assert_eq!(capture(|o| reduce(2, 0, &c, o)).0.unwrap_err().exit_code(), 2);
    }

    #[test]
    fn verify_validates_order() {
        let c = cfg(|s| s.order = Some(1));
        assert_eq!(capture(|o| verify(&c, o)).0.unwrap_err().exit_code(), 2);
    }
}
