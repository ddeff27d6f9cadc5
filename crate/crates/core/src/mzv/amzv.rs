//! Alternating multiple zeta values
//! `ζ(k₁,…,k_d; ε) = Σ_{0<n₁<…<n_d} Π ε_i^{n_i}/n_i^{k_i}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::accel::{alternating_sum, terms_for_digits};
use super::real::{bits_for_digits, Fixed};
use super::zeta::zeta_int;
use super::{guard_digits, HighPrecisionReal, MzvError};

/// Signed index: magnitude is the exponent, a negative sign marks `ε = −1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MZVIndex {
    entries: Vec<i32>,
}

impl MZVIndex {
    pub fn new(entries: Vec<i32>) -> Result<Self, MzvError> {
        if entries.is_empty() || entries.contains(&0) {
            return Err(MzvError::BadIndex(format!("{entries:?}")));
        }
        if *entries.last().unwrap() == 1 {
            return Err(MzvError::Divergent);
        }
        Ok(MZVIndex { entries })
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn depth(&self) -> usize {
        self.entries.len()
    }

    pub fn weight(&self) -> u32 {
        self.entries.iter().map(|e| e.unsigned_abs()).sum()
    }
}

impl FromStr for MZVIndex {
    type Err = MzvError;

    fn from_str(s: &str) -> Result<Self, MzvError> {
        let entries = s
            .split(',')
            .map(|t| t.trim().parse::<i32>().map_err(|_| MzvError::BadIndex(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        MZVIndex::new(entries)
    }
}

impl fmt::Display for MZVIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|&e| if e < 0 { format!("{}̄", -e) } else { e.to_string() })
            .collect();
        write!(f, "ζ({})", parts.join(","))
    }
}

fn check_supported(index: &MZVIndex) -> Result<(), MzvError> {
    let e = index.entries();
    let (last, inner) = e.split_last().unwrap();
    if inner.iter().any(|&k| k < 0) {
        return Err(MzvError::Unsupported(format!("{index}: barred inner entries")));
    }
    if *last > 0 && !inner.is_empty() {
        return Err(MzvError::Unsupported(format!("{index}: unbarred outer entry at depth ≥ 2")));
    }
    Ok(())
}

/// `a_n = S(n)/n^{k_d}` for `n = start..start+count`, where `S(n)` is the
/// nested inner sum over `n₁<…<n_{d−1}<n`, accumulated cumulatively.
fn outer_terms(inner: &[i32], k_last: u32, start: usize, count: usize, bits: u32) -> Vec<Fixed> {
    let one = Fixed::from_int(1, bits);
    let depth = inner.len();
    // s[r] = Σ over n₁<…<n_r<n of Π 1/n_i^{k_i}
    let mut s: Vec<Fixed> = (0..=depth).map(|r| if r == 0 { one.clone() } else { Fixed::zero(bits) }).collect();
    let mut out = Vec::with_capacity(count);
    for n in 1..start + count {
        if n >= start {
            out.push(s[depth].div_bigint(&BigInt::from(n as u64).pow(k_last)));
        }
        for r in (1..=depth).rev() {
            let inc = s[r - 1].div_bigint(&BigInt::from(n as u64).pow(inner[r - 1] as u32));
            s[r] = &s[r] + &inc;
        }
    }
    out
}

/// Accelerated outer sum at the given precision with `n` terms.
fn outer_sum(index: &MZVIndex, n: usize, bits: u32) -> Fixed {
    let e = index.entries();
    let (last, inner) = e.split_last().unwrap();
    let start = inner.len() + 1;
    let a = outer_terms(inner, last.unsigned_abs(), start, n, bits);
    let s = alternating_sum(n, |j| a[j].clone());
    if start % 2 == 1 {
        -s
    } else {
        s
    }
}

pub fn eval_amzv(index: &MZVIndex, digits: u32) -> Result<HighPrecisionReal, MzvError> {
    if digits > super::MAX_DIGITS {
        return Err(MzvError::TooManyDigits(digits));
    }
    check_supported(index)?;
    let guard = guard_digits(digits);
    let bits = bits_for_digits(digits + guard);
    let e = index.entries();
    if e.len() == 1 && e[0] > 0 {
        let v = zeta_int(e[0] as u32, bits, digits + guard);
        return Ok(HighPrecisionReal::new(v, digits, guard));
    }
    let n = terms_for_digits(digits + guard / 2);
    let coarse = outer_sum(index, n, bits);
    let fine = outer_sum(index, n + n / 4 + 8, bits);
    if !coarse.close_to(&fine, digits + 1) {
        return Err(MzvError::Stalled(format!("{index}: {coarse} vs {fine}")));
    }
    Ok(HighPrecisionReal::new(fine, digits, guard))
}

/// Brute-force bracket of an alternating value: consecutive partial sums
/// enclose the limit once the outer terms decrease monotonically. The
/// bracket is widened by a running bound on the f64 rounding error.
pub fn bracket_amzv(index: &MZVIndex, terms: usize) -> Result<(f64, f64), MzvError> {
    check_supported(index)?;
    let e = index.entries();
    let (last, inner) = e.split_last().unwrap();
    if *last > 0 {
        return Err(MzvError::Unsupported(format!("{index}: bracketing needs an alternating outer sum")));
    }
    let k = last.unsigned_abs() as i32;
    let mut s = vec![0f64; inner.len() + 1];
    s[0] = 1.0;
    let mut partial = 0f64;
    let mut prev_term = f64::INFINITY;
    let mut last_two = (0f64, 0f64);
    let mut rounding = 0f64;
    for n in 1..=terms + 1 {
        let nf = n as f64;
        let a = s[inner.len()] / nf.powi(k);
        let signed = if n % 2 == 0 { a } else { -a };
        if n > inner.len() + 2 && a > prev_term {
            return Err(MzvError::Stalled(format!("{index}: outer terms not decreasing at n = {n}")));
        }
        prev_term = a;
        partial += signed;
        rounding += f64::EPSILON * (partial.abs() + a * (inner.len() + 2) as f64);
        last_two = (last_two.1, partial);
        for r in (1..=inner.len()).rev() {
            s[r] += s[r - 1] / nf.powi(inner[r - 1]);
        }
    }
    let (lo, hi) = if last_two.0 < last_two.1 { last_two } else { (last_two.1, last_two.0) };
    Ok((lo - rounding, hi + rounding))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mzv::consts::{ln2, pi};

    #[test]
    fn parsing() {
        assert_eq!("1,-2".parse::<MZVIndex>().unwrap().entries(), &[1, -2]);
        assert_eq!("1".parse::<MZVIndex>(), Err(MzvError::Divergent));
        assert!("1,x".parse::<MZVIndex>().is_err());
        assert!(matches!(eval_amzv(&"2,3".parse().unwrap(), 10), Err(MzvError::Unsupported(_))));
    }

    #[test]
    fn depth_one_closed_forms() {
        let v = eval_amzv(&"-1".parse().unwrap(), 30).unwrap();
        let b = v.value().bits();
        assert!(v.value().close_to(&-ln2(b), 30));
        let v = eval_amzv(&"-2".parse().unwrap(), 30).unwrap();
        let p = pi(b);
        assert!(v.value().close_to(&-(&p * &p).div_int(12), 30));
    }

    #[test]
    fn one_two_bar_is_zeta3_over_8() {
        let v = eval_amzv(&"1,-2".parse().unwrap(), 30).unwrap();
        let z3 = zeta_int(3, v.value().bits(), 40);
        assert!(v.value().close_to(&z3.div_int(8), 30));
        let (lo, hi) = bracket_amzv(&"1,-2".parse().unwrap(), 200_000).unwrap();
        let x = v.value().to_f64();
        assert!(lo - 1e-12 <= x && x <= hi + 1e-12, "{lo} {x} {hi}");
    }
}
