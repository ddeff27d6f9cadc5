//! `f(a, b) = Σ_{i+j≤D} c_{ij} aⁱbʲ` with free symbols `c_{ij}`.

use crate::algebra::{int, Laurent, LaurentInS, Monomial, Rational, SWindow, SparsePoly, Var, XSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericFunction {
    degree: u32,
}

impl GenericFunction {
    pub fn new(degree: u32) -> Self {
        GenericFunction { degree }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn coefs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..=self.degree).flat_map(move |i| (0..=self.degree - i).map(move |j| (i, j)))
    }

    /// `f` as a polynomial in `a`, `b`.
    pub fn poly(&self) -> SparsePoly {
        SparsePoly::from_terms(self.coefs().map(|(i, j)| {
            (Monomial::from_pairs([(Var::Coef(i, j), 1), (Var::A, i), (Var::B, j)]), int(1))
        }))
    }

    /// `b·f(a+b, a) + a·f(a+b, b)`, the D₁ channel.
    pub fn d1_target(&self) -> SparsePoly {
        let (a, b) = (SparsePoly::var(Var::A), SparsePoly::var(Var::B));
        let f = self.poly();
        let sum = a.add(&b);
        let first = f.substitute_many(&[(Var::A, sum.clone()), (Var::B, a.clone())]).mul(&b);
        let second = f.substitute_many(&[(Var::A, sum), (Var::B, b.clone())]).mul(&a);
        first.add(&second)
    }

    /// `f(0, b)` as a polynomial in `b`.
    pub fn at_zero(&self) -> SparsePoly {
        self.poly().substitute(Var::A, &SparsePoly::zero())
    }

    /// `∂_b(f(0,b) − f(0,−b))`, the D₃ channel.
    pub fn d3_target(&self) -> SparsePoly {
        let f0 = self.at_zero();
        let reflected = f0.substitute(Var::B, &SparsePoly::var(Var::B).scale(&int(-1)));
        f0.sub(&reflected).derivative(Var::B)
    }

    /// `f(t·x, σ·b)` for `t ∈ {0, 1}`, as an x-series of Laurent series in
    /// `b`.
    pub fn line(&self, with_x: bool, sign: i64, order: usize, window: SWindow) -> XSeries<LaurentInS> {
        let mut coeffs = vec![Laurent::zero(window); order + 1];
        for (i, j) in self.coefs() {
            if (i > 0 && !with_x) || i as usize > order {
                continue;
            }
            let c = if sign < 0 && j % 2 == 1 { int(-1) } else { int(1) };
            coeffs[i as usize].add_term(j as i32, SparsePoly::term(Monomial::var(Var::Coef(i, j)), c));
        }
        XSeries::from_coeffs(coeffs)
    }

    /// `f^{(0,1)}(0, σ·b)`, the partial evaluated at `σ·b`.
    pub fn partial_b_at_zero(&self, sign: i64, order: usize, window: SWindow) -> XSeries<LaurentInS> {
        let mut c0 = Laurent::zero(window);
        for j in 1..=self.degree {
            let s = if sign < 0 && (j - 1) % 2 == 1 { -(j as i64) } else { j as i64 };
            c0.add_term(j as i32 - 1, SparsePoly::term(Monomial::var(Var::Coef(0, j)), Rational::from_integer(s.into())));
        }
        XSeries::constant(c0, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d1_target_of_constant_is_a_plus_b() {
        let p = GenericFunction::new(0).d1_target();
        let c = SparsePoly::var(Var::Coef(0, 0));
        assert_eq!(p, c.mul(&SparsePoly::var(Var::A).add(&SparsePoly::var(Var::B))));
    }

    #[test]
    fn lines_and_partials() {
        let w = SWindow::new(-4, 4);
        let g = GenericFunction::new(2);
        let l = g.line(true, -1, 3, w);
        // [x⁰] f(x,−b) = c00 − c01 b + c02 b²
        assert_eq!(l.coeff(0).coeff(1).unwrap(), SparsePoly::var(Var::Coef(0, 1)).scale(&int(-1)));
        assert_eq!(l.coeff(2).coeff(0).unwrap(), SparsePoly::var(Var::Coef(2, 0)));
        let d = g.partial_b_at_zero(-1, 0, w);
        // f₂(0, −b) = c01 − 2 c02 b
        assert_eq!(d.coeff(0).coeff(1).unwrap(), SparsePoly::var(Var::Coef(0, 2)).scale(&int(-2)));
        assert_eq!(g.d3_target(), SparsePoly::var(Var::Coef(0, 1)).scale(&int(2)));
    }
}
