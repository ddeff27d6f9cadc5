use num_traits::{One, Zero};

use super::{factorial_q, int, Rational, XSeries};
use crate::special::numbers::{bernoulli, euler_at_zero};

/// Elementary functions available as exact Taylor series in `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Elementary {
    Exp,
    Sinh,
    Cosh,
    Tanh,
    Sech,
    Sech2,
    Sin,
    Cos,
    /// `2/(1+e^w) = Σ E_i(0) wⁱ/i!`.
    EulerGen,
    /// `w·csc(w)`, the regular part of the csc Laurent series.
    WCscW,
    /// `w·cot(w)`.
    WCotW,
}

fn two_pow(k: u32) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(2).pow(k))
}

/// Exact coefficients `w⁰..w^order` of the chosen function.
pub fn elementary_series(kind: Elementary, order: usize) -> XSeries<Rational> {
    let n = order as u32;
    let coeffs: Vec<Rational> = match kind {
        Elementary::Exp => (0..=n).map(|k| factorial_q(k).recip()).collect(),
        Elementary::Sinh | Elementary::Cosh | Elementary::Sin | Elementary::Cos => {
            let odd = matches!(kind, Elementary::Sinh | Elementary::Sin);
            let alternating = matches!(kind, Elementary::Sin | Elementary::Cos);
            (0..=n)
                .map(|k| {
                    if (k % 2 == 1) != odd {
                        return Rational::zero();
                    }
                    let c = factorial_q(k).recip();
                    if alternating && (k / 2) % 2 == 1 {
                        -c
                    } else {
                        c
                    }
                })
                .collect()
        }
        Elementary::EulerGen => (0..=n).map(|k| euler_at_zero(k) / factorial_q(k)).collect(),
        // tanh(w) = 1 − 2/(1+e^{2w})
        Elementary::Tanh => (0..=n)
            .map(|k| {
                let e = euler_at_zero(k) * two_pow(k) / factorial_q(k);
                if k == 0 {
                    Rational::one() - e
                } else {
                    -e
                }
            })
            .collect(),
        Elementary::Sech => {
            return elementary_series(Elementary::Cosh, order)
                .inverse()
                .expect("cosh has unit constant term")
        }
        Elementary::Sech2 => {
            let s = elementary_series(Elementary::Sech, order);
            return s.times(&s);
        }
        // w/sin w = Σ (−1)^{k+1} (2^{2k} − 2) B_{2k} w^{2k}/(2k)!
        Elementary::WCscW => (0..=n)
            .map(|p| {
                if p % 2 == 1 {
                    return Rational::zero();
                }
                let k = p / 2;
                let sign = if k % 2 == 0 { int(-1) } else { int(1) };
                sign * (two_pow(p) - int(2)) * bernoulli(p) / factorial_q(p)
            })
            .collect(),
        // w cot w = Σ (−1)^k 2^{2k} B_{2k} w^{2k}/(2k)!
        Elementary::WCotW => (0..=n)
            .map(|p| {
                if p % 2 == 1 {
                    return Rational::zero();
                }
                let k = p / 2;
                let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                sign * two_pow(p) * bernoulli(p) / factorial_q(p)
            })
            .collect(),
    };
    XSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn ser(cs: &[Rational]) -> XSeries<Rational> {
        XSeries::from_coeffs(cs.to_vec())
    }

    #[test]
    fn small_expansions() {
        assert_eq!(elementary_series(Elementary::Exp, 2), ser(&[int(1), int(1), rat(1, 2)]));
        assert_eq!(
            elementary_series(Elementary::Tanh, 3),
            ser(&[int(0), int(1), int(0), rat(-1, 3)])
        );
        assert_eq!(elementary_series(Elementary::Sech, 2), ser(&[int(1), int(0), rat(-1, 2)]));
        assert_eq!(
            elementary_series(Elementary::Sin, 3),
            ser(&[int(0), int(1), int(0), rat(-1, 6)])
        );
    }

    #[test]
    fn trigonometric_relations() {
        let n = 14;
        let sin = elementary_series(Elementary::Sin, n + 1);
        let cos = elementary_series(Elementary::Cos, n);
        let sin_over_w = sin.div_x().unwrap();
        let csc = elementary_series(Elementary::WCscW, n);
        let cot = elementary_series(Elementary::WCotW, n);
        assert_eq!(csc.times(&sin_over_w), XSeries::constant(int(1), n));
        assert_eq!(cot.times(&sin_over_w), cos);
    }

    #[test]
    fn hyperbolic_relations() {
        let n = 12;
        let tanh = elementary_series(Elementary::Tanh, n);
        let sech2 = elementary_series(Elementary::Sech2, n);
        let one = XSeries::constant(int(1), n);
        assert_eq!(one.minus(&tanh.times(&tanh)), sech2);
        let sinh = elementary_series(Elementary::Sinh, n);
        let cosh = elementary_series(Elementary::Cosh, n);
        assert_eq!(tanh.times(&cosh), sinh);
    }
}
