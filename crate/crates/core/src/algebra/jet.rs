use std::collections::BTreeMap;

use super::{binomial, factorial, AlgebraError, Laurent, LaurentInS, Rational, Ring, SWindow, SparsePoly, Var};

/// Truncated Taylor expansion `Σ c_{ij} uⁱ vʲ` around a base point, with
/// `i ≤ order_u` and `j ≤ order_v`.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariateJet<R> {
    order_u: u32,
    order_v: u32,
    coeffs: BTreeMap<(u32, u32), R>,
    zero: R,
}

impl<R: Ring> BivariateJet<R> {
    pub fn new(order_u: u32, order_v: u32, zero: R) -> Self {
        BivariateJet { order_u, order_v, coeffs: BTreeMap::new(), zero }
    }

    pub fn order_u(&self) -> u32 {
        self.order_u
    }

    pub fn order_v(&self) -> u32 {
        self.order_v
    }

    /// Adds `c·uⁱvʲ`; terms past the jet orders are truncated away.
    pub fn add(&mut self, i: u32, j: u32, c: R) {
        if i > self.order_u || j > self.order_v || c.vanishes() {
            return;
        }
        match self.coeffs.get_mut(&(i, j)) {
            Some(old) => old.accumulate(&c),
            None => {
                self.coeffs.insert((i, j), c);
            }
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), &R)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn zero_elem(&self) -> &R {
        &self.zero
    }

    fn check(&self, i: u32, j: u32) -> Result<(), AlgebraError> {
        if i > self.order_u || j > self.order_v {
            return Err(AlgebraError::InsufficientJetOrder {
                need_u: i,
                need_v: j,
                have_u: self.order_u,
                have_v: self.order_v,
            });
        }
        Ok(())
    }

    /// `[uⁱvʲ]` of the jet.
    pub fn coeff(&self, i: u32, j: u32) -> Result<R, AlgebraError> {
        self.check(i, j)?;
        Ok(self.coeffs.get(&(i, j)).cloned().unwrap_or_else(|| self.zero.clone()))
    }

    /// The mixed partial `∂_uⁱ ∂_vʲ` at the base point, `i!·j!·[uⁱvʲ]`.
    pub fn partial(&self, i: u32, j: u32) -> Result<R, AlgebraError> {
        let c = self.coeff(i, j)?;
        let f = Rational::from_integer(factorial(i) * factorial(j));
        Ok(c.scaled(&f))
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = BivariateJet::new(
            self.order_u.min(other.order_u),
            self.order_v.min(other.order_v),
            self.zero.clone(),
        );
        for (&(i, j), c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add(i, j, c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        self.map(|r| r.scaled(c))
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        let mut out = BivariateJet::new(self.order_u, self.order_v, self.zero.clone());
        for (&(i, j), c) in &self.coeffs {
            out.add(i, j, f(c));
        }
        out
    }
}

impl BivariateJet<LaurentInS> {
    /// Jet of a polynomial already written in the displacements `u`, `v` and
    /// the base-point variable `s` (other generators are kept as
    /// coefficients).
    ///
    /// With `degree_cap = Some(T)` the polynomial is taken to be exact only
    /// through total `(u, v, s)`-degree `T`, so entry `(i, j)` is known to
    /// `s^{T−i−j}`.
    pub fn from_uvs_poly(
        p: &SparsePoly,
        order_u: u32,
        order_v: u32,
        window: SWindow,
        degree_cap: Option<u32>,
    ) -> Self {
        let mut jet = BivariateJet::new(order_u, order_v, Laurent::zero(window));
        for (key, rest) in p.split_by(&[Var::U, Var::V]) {
            let (i, j) = (key[0], key[1]);
            if i > order_u || j > order_v {
                continue;
            }
            let mut entry = laurent_in(&rest, Var::S, window);
            if let Some(t) = degree_cap {
                entry = entry.with_known_to(t as i32 - (i + j) as i32);
            }
            jet.add(i, j, entry);
        }
        if let Some(t) = degree_cap {
            // Entries that are absent are still only known to the cap.
            for i in 0..=order_u {
                for j in 0..=order_v {
                    jet.coeffs
                        .entry((i, j))
                        .or_insert_with(|| Laurent::zero(window).with_known_to(t as i32 - (i + j) as i32));
                }
            }
        }
        jet
    }

    /// Jet of a polynomial in `a`, `b` at `a = −s + u`, `b = s + v` (or, with
    /// `with_a = false`, of a polynomial in `b` alone at `b = s + v`).
    ///
    /// Uses `[uⁱvʲ] a^p b^q = C(p,i)(−s)^{p−i} C(q,j) s^{q−j}` directly, so
    /// only requested entries are ever expanded. `degree_cap` is as in
    /// [`Self::from_uvs_poly`], counted in `(a, b)`.
    pub fn from_ab_poly(
        p: &SparsePoly,
        with_a: bool,
        order_u: u32,
        order_v: u32,
        window: SWindow,
        degree_cap: Option<u32>,
    ) -> Result<Self, AlgebraError> {
        if !with_a && p.degree(Var::A) > 0 {
            return Err(AlgebraError::UnknownGenerator(Var::A));
        }
        let order_u = if with_a { order_u } else { 0 };
        let mut grid: BTreeMap<(u32, u32), BTreeMap<i32, SparsePoly>> = BTreeMap::new();
        for (key, rest) in p.split_by(&[Var::A, Var::B]) {
            let (pa, qb) = (key[0], key[1]);
            for i in 0..=pa.min(order_u) {
                let ca = binomial(pa as i64, i);
                let ca = if (pa - i) % 2 == 1 { -ca } else { ca };
                for j in 0..=qb.min(order_v) {
                    let c = &ca * binomial(qb as i64, j);
                    let e = (pa - i + qb - j) as i32;
                    let slot = grid.entry((i, j)).or_default().entry(e).or_insert_with(SparsePoly::zero);
                    slot.add_assign(&rest.scale(&c));
                }
            }
        }
        let mut jet = BivariateJet::new(order_u, order_v, Laurent::zero(window));
        for i in 0..=order_u {
            for j in 0..=order_v {
                let mut entry = Laurent::zero(window);
                if let Some(t) = degree_cap {
                    entry = entry.with_known_to(t as i32 - (i + j) as i32);
                }
                if let Some(row) = grid.remove(&(i, j)) {
                    for (e, c) in row {
                        entry.add_term(e, c);
                    }
                }
                if !entry.vanishes() {
                    jet.coeffs.insert((i, j), entry);
                }
            }
        }
        Ok(jet)
    }

    /// Jet in `v` (with `order_u = 0`) of a one-variable Laurent function
    /// `φ(b)` at `b = s + v`: `[vʲ] = Σ_e C(e, j) c_e s^{e−j}`.
    pub fn from_laurent_v(phi: &LaurentInS, order_v: u32) -> Self {
        let window = phi.window();
        let mut jet = BivariateJet::new(0, order_v, Laurent::zero(window));
        for j in 0..=order_v {
            let mut entry = Laurent::zero(window);
            if let Some(k) = phi.known_to() {
                entry = entry.with_known_to(k - j as i32);
            }
            for (e, c) in phi.terms() {
                let b = binomial(e as i64, j);
                entry.add_term(e - j as i32, c.scale(&b));
            }
            if let Some(u) = phi.underflow() {
                entry.accumulate(&Laurent::monomial(SparsePoly::one(), u - j as i32, window));
            }
            jet.coeffs.insert((0, j), entry);
        }
        jet
    }
}

/// Splits a polynomial by its power of `var` into a Laurent series with
/// nonnegative exponents.
pub(crate) fn laurent_in(p: &SparsePoly, var: Var, window: SWindow) -> LaurentInS {
    let mut out = Laurent::zero(window);
    for (key, c) in p.split_by(&[var]) {
        out.add_term(key[0] as i32, c);
    }
    out
}
