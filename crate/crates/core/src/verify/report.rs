use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::{LaurentInS, Ring, XSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Location of the first disagreement between two sides.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub x_order: usize,
    pub s_exponent: i32,
    pub monomial: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    /// Human-readable label of the statement being checked.
    pub anchor: String,
    pub status: Status,
    pub params: BTreeMap<String, u64>,
    pub first_mismatch: Option<Mismatch>,
    pub seconds: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<CheckReport>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates a report while a check runs.
pub(crate) struct ReportBuilder {
    name: String,
    anchor: String,
    params: BTreeMap<String, u64>,
    start: Instant,
    mismatch: Option<Mismatch>,
    children: Vec<CheckReport>,
}

impl ReportBuilder {
    pub fn new(name: &str, anchor: &str) -> Self {
        ReportBuilder {
            name: name.to_string(),
            anchor: anchor.to_string(),
            params: BTreeMap::new(),
            start: Instant::now(),
            mismatch: None,
            children: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: u64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    /// Keeps the first mismatch seen.
    pub fn record(&mut self, m: Option<Mismatch>) {
        if self.mismatch.is_none() {
            self.mismatch = m;
        }
    }

    pub fn child(&mut self, r: CheckReport) {
        self.children.push(r);
    }

    pub fn finish(self) -> CheckReport {
        let ok = self.mismatch.is_none() && self.children.iter().all(CheckReport::passed);
        CheckReport {
            name: self.name,
            anchor: self.anchor,
            status: if ok { Status::Pass } else { Status::Fail },
            params: self.params,
            first_mismatch: self.mismatch,
            seconds: self.start.elapsed().as_secs_f64(),
            children: self.children,
        }
    }
}

/// First `(x-order, s-exponent, monomial)` at which `lhs − rhs` is nonzero,
/// comparing through the smaller order.
pub fn compare_series(lhs: &XSeries<LaurentInS>, rhs: &XSeries<LaurentInS>) -> Option<Mismatch> {
    let order = lhs.order().min(rhs.order());
    for n in 0..=order {
        let diff = lhs.coeff(n).minus(&rhs.coeff(n));
        if let Some(u) = diff.underflow() {
            return Some(Mismatch {
                x_order: n,
                s_exponent: u,
                monomial: String::new(),
                detail: "s-window underflow".into(),
            });
        }
        let first = diff.terms().next().map(|(e, p)| {
            let (m, c) = p.terms().next().expect("stored coefficients are nonzero");
            Mismatch { x_order: n, s_exponent: e, monomial: m.to_string(), detail: format!("lhs − rhs = {c}") }
        });
        if first.is_some() {
            return first;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, Laurent, SWindow, SparsePoly, Var};

    #[test]
    fn mismatch_is_located() {
        let w = SWindow::new(-4, 4);
        let a = XSeries::constant(Laurent::monomial(SparsePoly::var(Var::Coef(1, 0)), -2, w), 2);
        let mut b = a.clone();
        assert!(compare_series(&a, &b).is_none());
        b.set_coeff(1, Laurent::monomial(SparsePoly::constant(int(3)), 1, w));
        let m = compare_series(&a, &b).unwrap();
        assert_eq!((m.x_order, m.s_exponent), (1, 1));
        assert_eq!(m.detail, "lhs − rhs = -3");
    }
}
