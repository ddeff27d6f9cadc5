//! Algebraic invariants on randomized inputs.

use proptest::prelude::*;
use zetaops::algebra::{
    elementary_series, int, parse_pq, rat, series_compose, to_pq, Elementary, Laurent, LaurentInS, Monomial, Rational,
    Ring, SWindow, SparsePoly, Var, XSeries,
};
use zetaops::operators::{apply_l1, apply_with, build_d1, build_d2, build_l2, apply_to_laurent, FunctionJet};
use zetaops::par::Exec;
use zetaops::special::euler_polynomial;
use zetaops::{BivariateJet, Substitution};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| rat(p, q))
}

fn poly() -> impl Strategy<Value = SparsePoly> {
    let vars = [Var::A, Var::B, Var::Da, Var::Db];
    prop::collection::vec((rational(), prop::collection::vec(0u32..=2, 4)), 0..5).prop_map(move |terms| {
        SparsePoly::from_terms(
            terms.into_iter().map(|(c, es)| (Monomial::from_pairs(vars.iter().copied().zip(es)), c)),
        )
    })
}

fn window() -> SWindow {
    SWindow::new(-40, 40)
}

fn laurent() -> impl Strategy<Value = LaurentInS> {
    prop::collection::vec((-4i32..=4, rational()), 0..5).prop_map(|terms| {
        Laurent::from_terms(terms.into_iter().map(|(e, c)| (e, SparsePoly::constant(c))), window())
    })
}

fn series(order: usize) -> impl Strategy<Value = XSeries<Rational>> {
    prop::collection::vec(rational(), order + 1).prop_map(XSeries::from_coeffs)
}

fn laurent_series(order: usize) -> impl Strategy<Value = XSeries<LaurentInS>> {
    prop::collection::vec(laurent(), order + 1).prop_map(XSeries::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn polynomial_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_empty());
        prop_assert_eq!(a.mul(&SparsePoly::one()), a.clone());
    }

    #[test]
    fn derivative_is_a_derivation(a in poly(), b in poly()) {
        for v in [Var::A, Var::Db] {
            let lhs = a.mul(&b).derivative(v);
            let rhs = a.derivative(v).mul(&b).add(&a.mul(&b.derivative(v)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert!(a.minus(&a).vanishes());
    }

    #[test]
    fn laurent_shift_round_trip(a in laurent(), k in -10i32..=10) {
        prop_assert_eq!(a.shift(k).shift(-k), a.clone());
        let d = a.times(&Laurent::monomial(SparsePoly::one(), 3, window())).derivative();
        let expect = a.derivative().shift(3).plus(&a.shift(2).scaled(&int(3)));
        prop_assert_eq!(d, expect);
    }

    #[test]
    fn laurent_window_is_enforced(e in 5i32..=12) {
        let w = SWindow::new(-4, 4);
        let p = Laurent::monomial(SparsePoly::one(), e, w);
        prop_assert!(p.terms().next().is_none());
        prop_assert_eq!(p.known_to(), Some(4));
        let q = Laurent::monomial(SparsePoly::one(), -e, w);
        prop_assert!(q.underflow().is_some());
        prop_assert!(q.coeff(0).is_err());
    }

    #[test]
    fn truncation_commutes_with_products(f in series(8), g in series(8), n in 0usize..=8) {
        prop_assert_eq!(f.times(&g).truncate(n), f.truncate(n).times(&g.truncate(n)));
        prop_assert_eq!(f.times_with(Exec::Parallel, &g), f.times_with(Exec::Sequential, &g));
    }

    #[test]
    fn exponential_of_sum(f in series(7), g in series(7)) {
        let f = f.shift_up(1).truncate(7);
        let g = g.shift_up(1).truncate(7);
        let exp = elementary_series(Elementary::Exp, 7);
        let lhs = series_compose(&exp, &f.plus(&g)).unwrap();
        let rhs = series_compose(&exp, &f).unwrap().times(&series_compose(&exp, &g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_series(f in series(8), c in rational()) {
        prop_assume!(c != int(0));
        let mut f = f;
        f.set_coeff(0, c);
        prop_assert_eq!(f.times(&f.inverse().unwrap()), XSeries::constant(int(1), 8));
    }

    #[test]
    fn rational_text_round_trip(r in rational()) {
        prop_assert_eq!(parse_pq(&to_pq(&r)).unwrap(), r);
    }

    #[test]
    fn euler_polynomial_identities(n in 0u32..=14, z in rational()) {
        // E_n(z) + E_n(z+1) = 2zⁿ and E_n(1−z) = (−1)ⁿE_n(z)
        let e = euler_polynomial(n);
        let zn = (0..n).fold(int(1), |acc, _| acc * &z);
        prop_assert_eq!(e.eval(&z) + e.eval(&(&z + int(1))), int(2) * zn);
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(e.eval(&(int(1) - &z)), sign * e.eval(&z));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn operator_action_is_linear(f in laurent(), g in laurent(), alpha in rational()) {
        let order = 5;
        let w = SWindow::new(-30, 30);
        let d2 = build_d2(order, w).unwrap();
        let act = |phi: &LaurentInS| {
            let jet = BivariateJet::from_laurent_v(&phi.with_window(w), order as u32 + 2);
            apply_with(Exec::Sequential, &d2, &FunctionJet::constant(Substitution::BEqS, jet)).unwrap()
        };
        let lhs = act(&f.plus(&g.scaled(&alpha)));
        let rhs = act(&f).plus(&act(&g).scaled(&alpha));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d1_action_parallel_matches_sequential(p in poly()) {
        let order = 4;
        let w = SWindow::new(-20, 20);
        let d1 = build_d1(order, w).unwrap();
        let (du, dv) = d1.max_degrees(order);
        let p = p.substitute(Var::Da, &SparsePoly::zero()).substitute(Var::Db, &SparsePoly::zero());
        let jet = BivariateJet::from_ab_poly(&p, true, du, dv, w, None).unwrap();
        let target = FunctionJet::constant(Substitution::AMinusSBS, jet);
        prop_assert_eq!(
            apply_with(Exec::Parallel, &d1, &target).unwrap(),
            apply_with(Exec::Sequential, &d1, &target).unwrap()
        );
    }

    #[test]
    fn l1_l2_inverse(phi in laurent_series(5)) {
        let l2 = build_l2(5, window());
        prop_assert_eq!(apply_l1(&apply_to_laurent(&l2, &phi).unwrap()), phi.clone());
        prop_assert_eq!(apply_to_laurent(&l2, &apply_l1(&phi)).unwrap(), phi);
    }
}
