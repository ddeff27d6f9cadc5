//! Output records and the json, LaTeX and text emitters.

use std::collections::BTreeMap;

use serde::Serialize;
use zetaops::algebra::{to_pq, Monomial, Rational, Var};
use zetaops::reduction::{Correction, Reduction};
use zetaops::special::zeta_ring::{gamma_degree, monomial_weight};
use zetaops::verify::{CheckReport, Status};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZetaTerm {
    /// Multiset of ζ-indices, sorted.
    pub zeta: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Target {
    pub ones: u32,
    pub bar: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorrectionRecord {
    pub n: u32,
    pub coeff: String,
    pub target: Target,
}

/// Witness of `ζ({1}^k, 2m̄) + Σ coeff·ζ({1}^ones, bar‾) = P`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityRecord {
    pub k: u32,
    pub m: u32,
    #[serde(rename = "P")]
    pub p: Vec<ZetaTerm>,
    pub corrections: Vec<CorrectionRecord>,
    pub residual: String,
    pub config: BTreeMap<String, serde_json::Value>,
    #[serde(skip)]
    source: Reduction,
}

fn zeta_multiset(m: &Monomial) -> Vec<u32> {
    let mut out = Vec::new();
    for &(v, e) in m.pairs() {
        if let Var::Zeta(n) = v {
            out.extend(std::iter::repeat_n(n, e as usize));
        }
    }
    out.sort_unstable();
    out
}

impl IdentityRecord {
    /// Asserts γ-freeness and weight homogeneity before accepting `r`.
    pub fn new(
        r: Reduction,
        residual: f64,
        config: BTreeMap<String, serde_json::Value>,
    ) -> Result<IdentityRecord, CliError> {
        if gamma_degree(&r.p) != 0 {
            return Err(CliError::Failure("P contains γ".into()));
        }
        let weight = r.weight();
        let mut p: Vec<ZetaTerm> = Vec::new();
        for (m, c) in r.p.terms() {
            if monomial_weight(m) != weight {
                return Err(CliError::Failure(format!("P has a term of weight {} ≠ {weight}", monomial_weight(m))));
            }
            p.push(ZetaTerm { zeta: zeta_multiset(m), coeff: to_pq(c) });
        }
        p.sort_by(|a, b| a.zeta.cmp(&b.zeta));
        let corrections = r
            .corrections
            .iter()
            .map(|c| CorrectionRecord { n: c.n, coeff: to_pq(&c.coeff), target: Target { ones: c.ones, bar: c.bar } })
            .collect();
        Ok(IdentityRecord { k: r.k, m: r.m, p, corrections, residual: format!("{residual:.3e}"), config, source: r })
    }

    /// Canonical JSON: keys sorted at every level.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("record is serializable");
        serde_json::to_string(&v).expect("value is serializable")
    }

    pub fn to_text(&self) -> String {
        let lhs = side(&self.source, &text_index, "·");
        format!("{lhs} = {}", poly_text(&self.source, false))
    }

    pub fn to_latex(&self) -> String {
        let lhs = side(&self.source, &latex_index, " ");
        format!("{lhs} = {}", poly_text(&self.source, true))
    }
}

fn text_index(ones: u32, bar: u32) -> String {
    let mut parts: Vec<String> = vec!["1".into(); ones as usize];
    parts.push(format!("{bar}\u{0304}"));
    format!("ζ({})", parts.join(","))
}

fn latex_index(ones: u32, bar: u32) -> String {
    let mut parts: Vec<String> = vec!["1".into(); ones as usize];
    parts.push(format!("\\overline{{{bar}}}"));
    format!("\\zeta({})", parts.join(","))
}

fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// `±c·body`, omitting a unit coefficient.
fn signed_term(c: &Rational, body: &str, latex: bool, first: bool, mul: &str) -> String {
    let neg = c < &Rational::from_integer(0.into());
    let a = if neg { -c.clone() } else { c.clone() };
    let minus = if latex { "-" } else { "−" };
    let sign = match (first, neg) {
        (true, true) => minus.to_string(),
        (true, false) => String::new(),
        (false, true) => format!(" {minus} "),
        (false, false) => " + ".into(),
    };
    let unit = a == Rational::from_integer(1.into());
    let coef = if latex { latex_rational(&a) } else { a.to_string() };
    match (unit, body.is_empty()) {
        (true, false) => format!("{sign}{body}"),
        (_, true) => format!("{sign}{coef}"),
        (false, false) => format!("{sign}{coef}{mul}{body}"),
    }
}

fn side(r: &Reduction, index: &dyn Fn(u32, u32) -> String, mul: &str) -> String {
    let latex = mul == " ";
    let mut out = index(r.k, 2 * r.m);
    for Correction { coeff, ones, bar, .. } in &r.corrections {
        out.push_str(&signed_term(coeff, &index(*ones, *bar), latex, false, mul));
    }
    out
}

fn poly_text(r: &Reduction, latex: bool) -> String {
    let mut terms: Vec<(Vec<u32>, Rational)> = r.p.terms().map(|(m, c)| (zeta_multiset(m), c.clone())).collect();
    terms.sort();
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (zs, c)) in terms.iter().enumerate() {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for z in zs {
            *counts.entry(*z).or_default() += 1;
        }
        let body: String = counts
            .iter()
            .map(|(z, e)| {
                let base = if latex { format!("\\zeta({z})") } else { format!("ζ({z})") };
                if *e > 1 { format!("{base}^{e}") } else { base }
            })
            .collect();
        out.push_str(&signed_term(c, &body, latex, i == 0, if latex { " " } else { "·" }));
    }
    out
}

/// One line per report (children indented in text).
pub fn report_lines(reports: &[CheckReport], format: crate::config::Format) -> Vec<String> {
    use crate::config::Format;
    match format {
        Format::Json => reports.iter().map(|r| serde_json::to_string(r).expect("report is serializable")).collect(),
        Format::Text => {
            let mut out = Vec::new();
            for r in reports {
                text_report(r, 0, &mut out);
            }
            out
        }
        Format::Latex => {
            let mut out = vec!["\\begin{tabular}{lll}".to_string(), "check & status & seconds \\\\ \\hline".into()];
            for r in reports {
                out.push(format!("\\texttt{{{}}} & {} & {:.3} \\\\", r.name.replace('_', "\\_"), status(r.status), r.seconds));
            }
            out.push("\\end{tabular}".into());
            out
        }
    }
}

fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
    }
}

fn text_report(r: &CheckReport, depth: usize, out: &mut Vec<String>) {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let params = if params.is_empty() { String::new() } else { format!(" [{}]", params.join(" ")) };
    let mut line = format!("{}{} {}{params} {:.3}s", "  ".repeat(depth), status(r.status), r.name, r.seconds);
    if let Some(m) = &r.first_mismatch {
        line.push_str(&format!(
            " first mismatch at x^{} s^{} {}: {}",
            m.x_order, m.s_exponent, m.monomial, m.detail
        ));
    }
    out.push(line);
    for c in &r.children {
        text_report(c, depth + 1, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use zetaops::par::Exec;
    use zetaops::reduction::zeta_polynomial;

    #[test]
    fn record_shape_and_determinism() {
        let r = zeta_polynomial(1, 1, None, Exec::Sequential).unwrap();
        let rec = IdentityRecord::new(r, 0.0, BTreeMap::new()).unwrap();
        let json = rec.to_json();
        assert_eq!(
            json,
            r#"{"P":[{"coeff":"1/2","zeta":[3]}],"config":{},"corrections":[{"coeff":"-1/2","n":2,"target":{"bar":3,"ones":0}}],"k":1,"m":1,"residual":"0.000e0"}"#
        );
        assert_eq!(rec.to_text(), "ζ(1,2̄) − 1/2·ζ(3̄) = 1/2·ζ(3)");
        assert_eq!(rec.to_latex(), "\\zeta(1,\\overline{2}) - \\frac{1}{2} \\zeta(\\overline{3}) = \\frac{1}{2} \\zeta(3)");
    }

    #[test]
    fn powers_in_text() {
        let r = zeta_polynomial(2, 1, None, Exec::Sequential).unwrap();
        let rec = IdentityRecord::new(r, 0.0, BTreeMap::new()).unwrap();
        assert!(rec.to_text().starts_with("ζ(1,1,2̄) − 1/2·ζ(1,3̄) = "), "{}", rec.to_text());
    }
}
