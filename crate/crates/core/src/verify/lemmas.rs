//! Translation, inversion, Laplace-exchange and Ψ/Ω identities, on
//! structured and randomized inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    elementary_series, factorial_q, int, rat, series_compose, Elementary, Laurent, LaurentInS, Monomial, Rational,
    Ring, SWindow, SparsePoly, Var, XSeries,
};
use crate::operators::{
    apply_l1, apply_to_laurent, build_d1, build_d1_split, build_l2, formal_laplace, translate_laurent,
    translate_series, translation_operator, OperatorError, OperatorSeries, PreLaplaceSeries, Substitution,
};
use crate::par::{self, Exec};
use crate::special::psi_omega;

use super::generic::GenericFunction;
use super::report::{compare_series, CheckReport, Mismatch, ReportBuilder};
use super::theorem::apply_poly;
use super::VerifyError;

type S = XSeries<LaurentInS>;

/// Degree of the generic target used for the substitution lemmas.
const TARGET_DEGREE: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaConfig {
    pub order: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        LemmaConfig { order: 8, trials: 50, seed: 0x5eed }
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let n = rng.random_range(-6i64..=6);
        if n != 0 {
            return rat(n, rng.random_range(1i64..=4));
        }
    }
}

fn random_laurent(rng: &mut ChaCha8Rng, w: SWindow) -> LaurentInS {
    let mut out = Laurent::zero(w);
    for _ in 0..rng.random_range(1..=4) {
        let e = rng.random_range(-3i32..=4);
        out.add_term(e, SparsePoly::constant(random_rational(rng)));
    }
    out
}

/// Random element of `ℚ[y, ∂_a, ∂_b]⟦x⟧` using only the listed generators.
fn random_pre_laplace(rng: &mut ChaCha8Rng, order: usize, vars: &[Var]) -> PreLaplaceSeries {
    let coeffs = (0..=order)
        .map(|_| {
            let mut p = SparsePoly::zero();
            for _ in 0..rng.random_range(0..=3) {
                let m = Monomial::from_pairs(vars.iter().map(|&v| {
                    let max = if v == Var::Y { 3 } else { 2 };
                    (v, rng.random_range(0..=max))
                }));
                p.add_term(m, random_rational(rng));
            }
            p
        })
        .collect();
    XSeries::from_coeffs(coeffs)
}

fn constant_series(phi: LaurentInS, order: usize) -> S {
    XSeries::constant(phi, order)
}

/// `exp(c·x·g)` for a polynomial `g`.
fn exp_of(g: &SparsePoly, c: Rational, order: usize) -> PreLaplaceSeries {
    let mut inner = XSeries::zero(SparsePoly::zero(), order);
    if order >= 1 {
        inner.set_coeff(1, g.scale(&c));
    }
    series_compose(&elementary_series(Elementary::Exp, order), &inner).expect("x-multiple argument")
}

/// Runs `case` for every trial index in parallel and keeps the first
/// mismatch in trial order.
fn trials<F>(exec: Exec, n: usize, case: F) -> Result<Option<Mismatch>, VerifyError>
where
    F: Fn(usize) -> Result<Option<Mismatch>, VerifyError> + Sync + Send,
{
    let results = par::map_range(exec, 0..n, case);
    for r in results {
        if let Some(m) = r? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn rng_for(cfg: &LemmaConfig, salt: u64, trial: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ (salt << 32) ^ trial as u64)
}

/// `exp(x∂_b)` as an operator versus the binomial expansion of `φ(b+x)`.
fn translation(cfg: &LemmaConfig, exec: Exec) -> Result<CheckReport, VerifyError> {
    let n = cfg.order;
    let w = SWindow::new(-(n as i32 + 8), n as i32 + 8);
    let mut r = ReportBuilder::new("translation", "exp(x∂_y) acts as translation by x");
    let op = translation_operator(n, w);
    let run = |phi: LaurentInS| -> Result<Option<Mismatch>, VerifyError> {
        let got = apply_to_laurent(&op, &constant_series(phi.clone(), n))?;
        Ok(compare_series(&got, &translate_laurent(&phi, n)))
    };
    r.record(run(Laurent::monomial(SparsePoly::one(), 2, w))?);
    r.record(run(Laurent::monomial(SparsePoly::one(), -1, w))?);
    r.record(trials(exec, cfg.trials, |t| run(random_laurent(&mut rng_for(cfg, 1, t), w)))?);
    Ok(r.param("order", n as u64).param("trials", cfg.trials as u64).finish())
}

/// `L₁∘L₂ = L₂∘L₁ = id`.
fn inversion(cfg: &LemmaConfig, exec: Exec) -> Result<CheckReport, VerifyError> {
    let n = cfg.order;
    let w = SWindow::new(-(2 * n as i32 + 8), n as i32 + 8);
    let mut r = ReportBuilder::new("inversion", "L₁ and L₂ are inverse");
    let l2 = build_l2(n, w);
    let run = |phi: LaurentInS| -> Result<Option<Mismatch>, VerifyError> {
        let id = constant_series(phi, n);
        let l1l2 = apply_l1(&apply_to_laurent(&l2, &id)?);
        if let Some(m) = compare_series(&l1l2, &id) {
            return Ok(Some(m));
        }
        let l2l1 = apply_to_laurent(&l2, &apply_l1(&id))?;
        Ok(compare_series(&l2l1, &id))
    };
    r.record(run(Laurent::monomial(SparsePoly::one(), -1, w))?);
    r.record(run(Laurent::monomial(SparsePoly::one(), 3, w))?);
    r.record(trials(exec, cfg.trials, |t| run(random_laurent(&mut rng_for(cfg, 2, t), w)))?);
    Ok(r.param("order", n as u64).param("trials", cfg.trials as u64).finish())
}

fn laplace_window(n: usize) -> SWindow {
    SWindow::new(-(n as i32 + 8), n as i32 + 8)
}

/// `exp(x∂_s) L{f}(s) = L{f·exp(−xy)}(s)`.
fn laplace_translate(cfg: &LemmaConfig, exec: Exec) -> Result<CheckReport, VerifyError> {
    let n = cfg.order;
    let w = laplace_window(n);
    let y = SparsePoly::var(Var::Y);
    let e = exp_of(&y, int(-1), n);
    let mut r = ReportBuilder::new("laplace_translate", "exp(x∂_s) L{f} = L{f·exp(−xy)}");
    let run = |f: PreLaplaceSeries| -> Result<Option<Mismatch>, VerifyError> {
        let lhs = translate_series(formal_laplace(&f, w).map_err(OperatorError::from)?.body());
        let rhs = formal_laplace(&f.times(&e), w).map_err(OperatorError::from)?;
        Ok(compare_series(&lhs, rhs.body()))
    };
    r.record(run(XSeries::constant(y.clone(), n))?);
    r.record(run(XSeries::constant(SparsePoly::one(), n))?);
    r.record(trials(exec, cfg.trials, |t| {
        run(random_pre_laplace(&mut rng_for(cfg, 3, t), n, &[Var::Y, Var::Da, Var::Db]))
    })?);
    Ok(r.param("order", n as u64).param("trials", cfg.trials as u64).finish())
}

/// `exp(x∂_s)∘L{f}|_sub = L{f·shift·exp(−xy)}|_sub`, checked by acting on
/// a generic target.
#[allow(clippy::too_many_arguments)]
fn substituted_exchange(
    cfg: &LemmaConfig,
    exec: Exec,
    name: &str,
    anchor: &str,
    salt: u64,
    vars: &[Var],
    sub: Substitution,
    structured: PreLaplaceSeries,
    shift: Rational,
) -> Result<CheckReport, VerifyError> {
    let n = cfg.order;
    let w = laplace_window(n);
    let f_gen = GenericFunction::new(TARGET_DEGREE);
    let target = match sub {
        Substitution::AMinusSBS => f_gen.poly(),
        _ => f_gen.at_zero(),
    };
    let y = SparsePoly::var(Var::Y);
    let shift_gen = match sub {
        Substitution::AMinusSBS => SparsePoly::var(Var::Db).sub(&SparsePoly::var(Var::Da)),
        _ => SparsePoly::var(Var::Db),
    };
    let factor = exp_of(&shift_gen, shift, n).times(&exp_of(&y, int(-1), n));
    let mut r = ReportBuilder::new(name, anchor);
    let run = |f: PreLaplaceSeries| -> Result<Option<Mismatch>, VerifyError> {
        let plain = OperatorSeries::new(formal_laplace(&f, w).map_err(OperatorError::from)?.body().clone(), sub);
        let lhs = translate_series(&apply_poly(Exec::Sequential, &plain, &target, w)?);
        let moved = formal_laplace(&f.times(&factor), w).map_err(OperatorError::from)?;
        let moved = OperatorSeries::new(moved.body().clone(), sub);
        let rhs = apply_poly(Exec::Sequential, &moved, &target, w)?;
        Ok(compare_series(&lhs, &rhs))
    };
    r.record(run(structured)?);
    r.record(trials(exec, cfg.trials, |t| run(random_pre_laplace(&mut rng_for(cfg, salt, t), n, vars)))?);
    Ok(r.param("order", n as u64).param("trials", cfg.trials as u64).param("target_degree", TARGET_DEGREE as u64).finish())
}

/// `L{y·f} = −∂_s L{f}`, `L{∂_y f} = s L{f} − f|_{y=0}` and
/// `L{f·e^{xy}}(s) = L{f}(s − x)`.
fn laplace_rules(cfg: &LemmaConfig, exec: Exec) -> Result<CheckReport, VerifyError> {
    let n = cfg.order;
    let w = laplace_window(n);
    let y = SparsePoly::var(Var::Y);
    let e_plus = exp_of(&y, int(1), n);
    let mut r = ReportBuilder::new("laplace_rules", "Laplace derivative and shift rules");
    let run = |f: PreLaplaceSeries| -> Result<Option<Mismatch>, VerifyError> {
        let lf = formal_laplace(&f, w).map_err(OperatorError::from)?.body().clone();
        let ly = formal_laplace(&f.map(|p| p.mul(&y)), w).map_err(OperatorError::from)?;
        if let Some(m) = compare_series(ly.body(), &lf.map(|c| c.derivative().negated())) {
            return Ok(Some(m));
        }
        let ld = formal_laplace(&f.map(|p| p.derivative(Var::Y)), w).map_err(OperatorError::from)?;
        let at0 = f.map_into(|p| Laurent::constant(p.substitute(Var::Y, &SparsePoly::zero()), w));
        if let Some(m) = compare_series(ld.body(), &lf.map(|c| c.shift(1)).minus(&at0)) {
            return Ok(Some(m));
        }
        let le = formal_laplace(&f.times(&e_plus), w).map_err(OperatorError::from)?;
        let back = translate_series(&lf.rescale_x(&int(-1))).rescale_x(&int(-1));
        Ok(compare_series(le.body(), &back))
    };
    r.record(trials(exec, cfg.trials, |t| {
        run(random_pre_laplace(&mut rng_for(cfg, 6, t), n, &[Var::Y, Var::Da, Var::Db]))
    })?);
    Ok(r.param("order", n as u64).param("trials", cfg.trials as u64).finish())
}

/// `t ↦ c_t·xᵗ s^{−t}`.
fn in_x_over_s(q: &XSeries<Rational>, w: SWindow) -> S {
    XSeries::from_coeffs(
        (0..=q.order()).map(|t| Laurent::monomial(SparsePoly::constant(q.coeff(t)), -(t as i32), w)).collect(),
    )
}

/// `s·L{2/(1+e^{xy})} = Ψ(x/s)`, both lines of the Ψ translation identity,
/// and the Ω combination.
fn psi_omega_identities(cfg: &LemmaConfig) -> Result<CheckReport, VerifyError> {
    let n = cfg.order;
    let w = laplace_window(n);
    let mut report = ReportBuilder::new("psi_omega", "Ψ/Ω identities");
    let po = psi_omega(n + 1);
    let psi = po.psi.truncate(n);

    let mut link = ReportBuilder::new("psi_laplace", "s·L{2/(1+e^{xy})} = Ψ(x/s)");
    let y = SparsePoly::var(Var::Y);
    let euler = elementary_series(Elementary::EulerGen, n);
    let pre: PreLaplaceSeries = XSeries::from_coeffs((0..=n).map(|i| y.pow(i as u32).scale(&euler.coeff(i))).collect());
    let l = formal_laplace(&pre, w).map_err(OperatorError::from)?;
    link.record(compare_series(&l.body().map(|c| c.shift(1)), &in_x_over_s(&psi, w)));
    report.child(link.finish());

    // t/(1+t) = Σ (−1)^{k−1} tᵏ
    let inner = XSeries::from_coeffs(
        (0..=n).map(|k| if k == 0 { int(0) } else if k % 2 == 1 { int(1) } else { int(-1) }).collect(),
    );
    let one_t = XSeries::from_coeffs((0..=n).map(|k| if k <= 1 { int(1) } else { int(0) }).collect::<Vec<Rational>>());
    let two = XSeries::constant(int(2), n);
    let mut trans = ReportBuilder::new("psi_translation", "Ψ(x/(x+s)) and Ψ′(x/(x+s)) in terms of Ψ(x/s)");
    let lhs1 = series_compose(&psi, &inner).map_err(OperatorError::from)?;
    let rhs1 = two.minus(&one_t.times(&psi));
    trans.record(compare_series(&in_x_over_s(&lhs1, w), &in_x_over_s(&rhs1, w)));
    let dpsi = po.psi.derivative().truncate(n);
    let lhs2 = series_compose(&dpsi, &inner).map_err(OperatorError::from)?;
    let rhs2 = one_t.pow(2).times(&psi).plus(&one_t.pow(3).times(&dpsi)).negated();
    trans.record(compare_series(&in_x_over_s(&lhs2, w), &in_x_over_s(&rhs2, w)));
    report.child(trans.finish());

    let mut comb = ReportBuilder::new("omega_combination", "exp(x∂_s)(1/2s)(−1+Ω(x/s)) closed form");
    let omega = in_x_over_s(&po.omega.truncate(n), w);
    let one = XSeries::constant(Laurent::constant(SparsePoly::one(), w), n);
    let phi = omega.minus(&one).map(|c| c.shift(-1).scaled(&rat(1, 2)));
    let lhs = translate_series(&phi);
    let grow = in_x_over_s(&one_t.pow(2), w).map(|c| c.clone());
    let inv_sx = translate_laurent(&Laurent::monomial(SparsePoly::constant(rat(1, 2)), -1, w), n);
    let rhs = inv_sx.times(&one.minus(&grow.times(&omega)));
    comb.record(compare_series(&lhs, &rhs));
    report.child(comb.finish());
    Ok(report.param("order", n as u64).finish())
}

fn d1_split(cfg: &LemmaConfig) -> Result<CheckReport, VerifyError> {
    let n = cfg.order;
    let w = SWindow::for_order(n);
    let mut r = ReportBuilder::new("d1_split", "D₁ = D₁⁰ + D₁¹ + D₁²");
    let d1 = build_d1(n, w).map_err(OperatorError::from)?;
    let split = build_d1_split(n, w).map_err(OperatorError::from)?;
    r.record(compare_series(split.sum().body(), d1.body()));
    let mut d10 = XSeries::zero(Laurent::zero(w), n);
    d10.set_coeff(0, Laurent::monomial(SparsePoly::constant(rat(1, 2)), -1, w));
    r.record(compare_series(split.d10.body(), &d10));
    Ok(r.param("order", n as u64).finish())
}

pub fn check_lemma_suite(cfg: &LemmaConfig, exec: Exec) -> Result<Vec<CheckReport>, VerifyError> {
    let n = cfg.order;
    let y = SparsePoly::var(Var::Y);
    let y2da = SparsePoly::term(Monomial::from_pairs([(Var::Y, 2), (Var::Da, 1)]), int(1));
    let y_db = SparsePoly::term(Monomial::from_pairs([(Var::Y, 1), (Var::Db, 1)]), int(1));
    let y3 = y.pow(3).scale(&factorial_q(3).recip());
    Ok(vec![
        translation(cfg, exec)?,
        inversion(cfg, exec)?,
        laplace_translate(cfg, exec)?,
        substituted_exchange(
            cfg,
            exec,
            "exchange_ab",
            "translation through a=−s, b=s",
            4,
            &[Var::Y, Var::Da, Var::Db],
            Substitution::AMinusSBS,
            XSeries::constant(y2da, n),
            int(1),
        )?,
        substituted_exchange(
            cfg,
            exec,
            "exchange_b",
            "translation through b=s, f in ℚ[y, ∂_b]",
            5,
            &[Var::Y, Var::Db],
            Substitution::BEqS,
            XSeries::constant(y_db, n),
            int(1),
        )?,
        substituted_exchange(
            cfg,
            exec,
            "exchange_y",
            "translation through b=s, f in ℚ[y]",
            7,
            &[Var::Y],
            Substitution::BEqS,
            XSeries::constant(y3, n),
            int(1),
        )?,
        laplace_rules(cfg, exec)?,
        psi_omega_identities(cfg)?,
        d1_split(cfg)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_at_small_order() {
        let cfg = LemmaConfig { order: 4, trials: 6, seed: 11 };
        for r in check_lemma_suite(&cfg, Exec::Sequential).unwrap() {
            assert!(r.passed(), "{}: {:?} {:?}", r.name, r.first_mismatch, r.children);
        }
    }

    #[test]
    fn missing_shift_is_caught() {
        let cfg = LemmaConfig { order: 3, trials: 2, seed: 3 };
        let f = XSeries::constant(SparsePoly::var(Var::Y), 3);
        for sub in [Substitution::AMinusSBS, Substitution::BEqS] {
            let r = substituted_exchange(&cfg, Exec::Sequential, "t", "t", 9, &[Var::Y], sub, f.clone(), int(0))
                .unwrap();
            assert!(!r.passed());
        }
    }

    #[test]
    fn broken_inverse_is_caught() {
        let w = SWindow::new(-12, 8);
        let l2 = build_l2(3, w).scaled(&rat(1, 2));
        let id = constant_series(Laurent::monomial(SparsePoly::one(), 1, w), 3);
        let back = apply_l1(&apply_to_laurent(&l2, &id).unwrap());
        assert!(compare_series(&back, &id).is_some());
    }
}
