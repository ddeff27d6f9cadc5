use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, BaseRing, Rational, Ring};

/// Commuting generators. The derived order is the order of the generator
/// universe and fixes the canonical term order of every polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// First function argument.
    A,
    /// Second function argument.
    B,
    /// The Laplace variable, used with non-negative powers inside jets.
    S,
    /// Displacement of `a` from its base point.
    U,
    /// Displacement of `b` from its base point.
    V,
    /// Integration variable of the formal Laplace transform.
    Y,
    /// ∂_a.
    Da,
    /// ∂_b.
    Db,
    /// Euler–Mascheroni constant γ.
    EulerGamma,
    /// Single zeta value ζ(n), n ≥ 2.
    Zeta(u32),
    /// Free coefficient c_{i,j} of a generic function Σ c_{ij} aⁱ bʲ.
    Coef(u32, u32),
    /// Free symbol Z_{k,n} standing for ζ({1}^{k−1}, n+1 bar).
    Z(u32, u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::A => write!(f, "a"),
            Var::B => write!(f, "b"),
            Var::S => write!(f, "s"),
            Var::U => write!(f, "u"),
            Var::V => write!(f, "v"),
            Var::Y => write!(f, "y"),
            Var::Da => write!(f, "∂_a"),
            Var::Db => write!(f, "∂_b"),
            Var::EulerGamma => write!(f, "γ"),
            Var::Zeta(n) => write!(f, "ζ({n})"),
            Var::Coef(i, j) => write!(f, "c[{i},{j}]"),
            Var::Z(k, n) => write!(f, "Z[{k},{n}]"),
        }
    }
}

/// Sparse exponent vector, sorted by generator with no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn power(v: Var, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m = Self::one();
        for (v, e) in pairs {
            m = m.mul(&Self::power(v, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        self.0
            .iter()
            .filter(|(v, _)| vars.contains(v))
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Removes `v`, returning its exponent and the remaining monomial.
    pub fn split_var(&self, v: Var) -> (u32, Monomial) {
        let e = self.exponent(v);
        let rest = self.0.iter().copied().filter(|(w, _)| *w != v).collect();
        (e, Monomial(rest))
    }

    /// Splits into the exponents of `vars` (in the given order) and the rest.
    pub fn split_vars(&self, vars: &[Var]) -> (Vec<u32>, Monomial) {
        let exps = vars.iter().map(|&v| self.exponent(v)).collect();
        let rest = self
            .0
            .iter()
            .copied()
            .filter(|(w, _)| !vars.contains(w))
            .collect();
        (exps, Monomial(rest))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Multivariate polynomial over ℚ in commuting generators.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree_in(&self, vars: &[Var]) -> u32 {
        self.terms.keys().map(|m| m.degree_in(vars)).max().unwrap_or(0)
    }

    /// Generators that actually occur.
    pub fn generators(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(v, _)| v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn derivative(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            if e > 0 {
                out.add_term(rest.mul(&Monomial::power(v, e - 1)), c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Replaces `v` by `value`.
    pub fn substitute(&self, v: Var, value: &SparsePoly) -> Self {
        self.substitute_many(&[(v, value.clone())])
    }

    /// Simultaneous substitution of several generators.
    pub fn substitute_many(&self, subs: &[(Var, SparsePoly)]) -> Self {
        let vars: Vec<Var> = subs.iter().map(|(v, _)| *v).collect();
        let mut powers: Vec<Vec<SparsePoly>> = vec![vec![Self::one()]; subs.len()];
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (exps, rest) = m.split_vars(&vars);
            let mut acc = Self::term(rest, c.clone());
            for (k, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[k].len() <= e as usize {
                    let next = powers[k].last().unwrap().mul(&subs[k].1);
                    powers[k].push(next);
                }
                acc = acc.mul(&powers[k][e as usize]);
            }
            out.add_assign(&acc);
        }
        out
    }

    /// Substitution that rejects generators outside `universe`.
    pub fn substitute_checked(
        &self,
        universe: &Universe,
        v: Var,
        value: &SparsePoly,
    ) -> Result<Self, AlgebraError> {
        if !universe.contains(v) {
            return Err(AlgebraError::UnknownGenerator(v));
        }
        Ok(self.substitute(v, value))
    }

    /// Groups terms by the exponents of `vars`; the values hold the remaining factors.
    pub fn split_by(&self, vars: &[Var]) -> BTreeMap<Vec<u32>, SparsePoly> {
        let mut out: BTreeMap<Vec<u32>, SparsePoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (exps, rest) = m.split_vars(vars);
            out.entry(exps).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// Coefficient of `v^e`, as a polynomial in the other generators.
    pub fn coefficient_of_power(&self, v: Var, e: u32) -> SparsePoly {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (k, rest) = m.split_var(v);
            if k == e {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Drops terms whose degree in `vars` exceeds `max`.
    pub fn truncate_degree(&self, vars: &[Var], max: u32) -> Self {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(vars) <= max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coefficients(&self, mut f: impl FnMut(&Monomial, &Rational) -> Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(m, c))))
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}·{m}")?;
            }
        }
        Ok(())
    }
}

impl Ring for SparsePoly {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn constant_like(&self, c: &Rational) -> Self {
        Self::constant(c.clone())
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn to_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.constant_term())
    }
    fn accumulate(&mut self, other: &Self) {
        self.add_assign(other);
    }
}

impl BaseRing for SparsePoly {
    fn ring_zero() -> Self {
        SparsePoly::zero()
    }
    fn ring_one() -> Self {
        SparsePoly::one()
    }
}

/// Ordered list of generators a polynomial is allowed to mention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe(Vec<Var>);

impl Universe {
    pub fn new(mut vars: Vec<Var>) -> Self {
        vars.sort();
        vars.dedup();
        Universe(vars)
    }

    pub fn contains(&self, v: Var) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }
}

/// Operation selector for [`poly_arith`].
#[derive(Clone, Debug, PartialEq)]
pub enum PolyOp {
    Add,
    Mul,
    Scale(Rational),
    Derivative(Var),
    /// Substitute the generator by the second operand.
    Substitute(Var),
}

/// Dispatches one polynomial operation over a shared generator universe.
pub fn poly_arith(
    op: &PolyOp,
    p: &SparsePoly,
    q: &SparsePoly,
    universe: &Universe,
) -> Result<SparsePoly, AlgebraError> {
    Ok(match op {
        PolyOp::Add => p.add(q),
        PolyOp::Mul => p.mul(q),
        PolyOp::Scale(c) => p.scale(c),
        PolyOp::Derivative(v) => {
            if !universe.contains(*v) {
                return Err(AlgebraError::UnknownGenerator(*v));
            }
            p.derivative(*v)
        }
        PolyOp::Substitute(v) => p.substitute_checked(universe, *v, q)?,
    })
}

macro_rules! impl_ref_ops {
    ($t:ty) => {
        impl std::ops::Add for &$t {
            type Output = $t;
            fn add(self, rhs: Self) -> $t {
                Ring::plus(self, rhs)
            }
        }
        impl std::ops::Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: Self) -> $t {
                Ring::minus(self, rhs)
            }
        }
        impl std::ops::Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: Self) -> $t {
                Ring::times(self, rhs)
            }
        }
        impl std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                Ring::negated(self)
            }
        }
    };
}

impl_ref_ops!(SparsePoly);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn y() -> SparsePoly {
        SparsePoly::var(Var::Y)
    }
    fn da() -> SparsePoly {
        SparsePoly::var(Var::Da)
    }
    fn db() -> SparsePoly {
        SparsePoly::var(Var::Db)
    }

    fn universe() -> Universe {
        Universe::new(vec![Var::Y, Var::Da, Var::Db])
    }

    #[test]
    fn power_rule() {
        let p = db().pow(3);
        let d = poly_arith(&PolyOp::Derivative(Var::Db), &p, &SparsePoly::zero(), &universe()).unwrap();
        assert_eq!(d, db().pow(2).scale(&int(3)));
    }

    #[test]
    fn distributivity_example() {
        let lhs = poly_arith(&PolyOp::Mul, &y(), &(&y() + &da()), &universe()).unwrap();
        assert_eq!(lhs, &y().pow(2) + &(&y() * &da()));
    }

    #[test]
    fn evaluation_example() {
        let p = &(&y() * &da()) + &db();
        let r = poly_arith(&PolyOp::Substitute(Var::Y), &p, &SparsePoly::zero(), &universe()).unwrap();
        assert_eq!(r, db());
    }

    #[test]
    fn unknown_generator_is_rejected() {
        let err = poly_arith(&PolyOp::Substitute(Var::A), &y(), &SparsePoly::zero(), &universe());
        assert_eq!(err, Err(AlgebraError::UnknownGenerator(Var::A)));
    }

    #[test]
    fn no_zero_coefficients_are_stored() {
        let p = &y() - &y();
        assert!(p.is_empty());
        let q = (&y() + &da()).scale(&rat(0, 1));
        assert!(q.is_empty());
    }

    #[test]
    fn simultaneous_substitution_swaps() {
        let a = SparsePoly::var(Var::A);
        let b = SparsePoly::var(Var::B);
        let p = &a * &a.add(&b.scale(&int(2)));
        let swapped = p.substitute_many(&[(Var::A, b.clone()), (Var::B, a.clone())]);
        assert_eq!(swapped, &b * &b.add(&a.scale(&int(2))));
    }

    #[test]
    fn split_by_groups_remaining_factor() {
        let p = &(&SparsePoly::var(Var::U) * &SparsePoly::var(Var::Coef(1, 0))) + &SparsePoly::var(Var::U);
        let groups = p.split_by(&[Var::U, Var::V]);
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[&vec![1, 0]], &SparsePoly::var(Var::Coef(1, 0)) + &SparsePoly::one());
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&y() * &da()).scale(&rat(-1, 2)) + &SparsePoly::constant(int(3));
        assert_eq!(p.to_string(), "3 - 1/2·y·∂_a");
    }
}
