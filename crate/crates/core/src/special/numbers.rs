//! Bernoulli numbers, Euler numbers at zero, and Euler polynomials.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::algebra::{binomial, Rational};

struct Table {
    values: RwLock<Vec<Rational>>,
    next: fn(&[Rational]) -> Rational,
}

impl Table {
    fn get(&self, n: usize) -> Rational {
        if let Some(v) = self.values.read().expect("poisoned table").get(n) {
            return v.clone();
        }
        let mut w = self.values.write().expect("poisoned table");
        while w.len() <= n {
            let v = (self.next)(&w);
            w.push(v);
        }
        w[n].clone()
    }
}

fn next_bernoulli(prev: &[Rational]) -> Rational {
    let n = prev.len() as i64;
    if n == 0 {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for (k, b) in prev.iter().enumerate() {
        acc += binomial(n + 1, k as u32) * b;
    }
    -acc / Rational::from_integer((n + 1).into())
}

// (1 + e^t)·Σ E_n(0) tⁿ/n! = 2
fn next_euler_zero(prev: &[Rational]) -> Rational {
    let n = prev.len() as i64;
    if n == 0 {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for (k, e) in prev.iter().enumerate() {
        acc += binomial(n, k as u32) * e;
    }
    -acc / Rational::from_integer(2.into())
}

fn bernoulli_table() -> &'static Table {
    static T: OnceLock<Table> = OnceLock::new();
    T.get_or_init(|| Table { values: RwLock::new(Vec::new()), next: next_bernoulli })
}

fn euler_table() -> &'static Table {
    static T: OnceLock<Table> = OnceLock::new();
    T.get_or_init(|| Table { values: RwLock::new(Vec::new()), next: next_euler_zero })
}

/// Bernoulli number `B_n` with `B₁ = −1/2`.
pub fn bernoulli(n: u32) -> Rational {
    bernoulli_table().get(n as usize)
}

/// `E_n(0)`, the coefficients of `2/(1+eᵗ) = Σ E_n(0) tⁿ/n!`.
pub fn euler_at_zero(n: u32) -> Rational {
    euler_table().get(n as usize)
}

/// Euler polynomial `E_n(z)` as coefficients of `z⁰..zⁿ`.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerPolynomial {
    coeffs: Vec<Rational>,
}

impl EulerPolynomial {
    pub fn degree(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `[zᵏ]E_n`, zero past the degree.
    pub fn coeff(&self, k: u32) -> Rational {
        self.coeffs.get(k as usize).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * z + c)
    }
}

/// `E_n(z) = Σ_k C(n,k) E_k(0) z^{n−k}`.
pub fn euler_polynomial(n: u32) -> EulerPolynomial {
    let coeffs = (0..=n)
        .map(|p| binomial(n as i64, n - p) * euler_at_zero(n - p))
        .collect();
    EulerPolynomial { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn classical_values() {
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert_eq!(bernoulli(13), int(0));
    }

    #[test]
    fn euler_zero_against_bernoulli() {
        assert_eq!(euler_at_zero(1), rat(-1, 2));
        assert_eq!(euler_at_zero(2), int(0));
        assert_eq!(euler_at_zero(5), rat(-1, 2));
        // E_n(0) = 2(1 − 2^{n+1}) B_{n+1}/(n+1)
        for n in 1..25u32 {
            let two = Rational::from_integer(num_bigint::BigInt::from(2).pow(n + 1));
            let expect = int(2) * (int(1) - two) * bernoulli(n + 1) / int(n as i64 + 1);
            assert_eq!(euler_at_zero(n), expect, "n = {n}");
        }
    }

    #[test]
    fn low_euler_polynomials() {
        assert_eq!(euler_polynomial(0).coeffs(), &[int(1)]);
        assert_eq!(euler_polynomial(1).coeffs(), &[rat(-1, 2), int(1)]);
        assert_eq!(euler_polynomial(3).coeffs(), &[rat(1, 4), int(0), rat(-3, 2), int(1)]);
    }

    #[test]
    fn reflection_identity() {
        for n in 0..=30u32 {
            let e = euler_polynomial(n);
            for z in [int(0), rat(1, 3), int(-2), rat(7, 5)] {
                let lhs = e.eval(&z) + e.eval(&(z.clone() + int(1)));
                let rhs = int(2) * z.pow(n as i32);
                assert_eq!(lhs, rhs, "n = {n}");
            }
        }
    }
}
