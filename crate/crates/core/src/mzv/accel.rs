//! Chebyshev (Cohen–Rodriguez Villegas–Zagier) acceleration of alternating
//! sums `Σ_{k≥0} (−1)^k a_k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::real::Fixed;

/// Exact weights: `Σ (−1)^k a_k ≈ Σ w_k a_k / d` with `d = T_n(3)`.
#[derive(Clone, Debug)]
pub struct CrvzWeights {
    pub d: BigInt,
    pub w: Vec<BigInt>,
}

impl CrvzWeights {
    pub fn new(n: usize) -> Self {
        // T_{k+1}(3) = 6T_k(3) − T_{k−1}(3)
        let (mut t0, mut t1) = (BigInt::one(), BigInt::from(3));
        for _ in 0..n {
            let t2 = &t1 * 6 - &t0;
            t0 = t1;
            t1 = t2;
        }
        let d = t0;
        let ni = n as i64;
        let mut b = BigInt::from(-1);
        let mut c = -d.clone();
        let mut w = Vec::with_capacity(n);
        for k in 0..ni {
            c = &b - &c;
            w.push(c.clone());
            // b ← b·(k+n)(k−n)/((k+1/2)(k+1)), exact in integers
            let num = &b * BigInt::from(2 * (k + ni) * (k - ni));
            let den = BigInt::from((2 * k + 1) * (k + 1));
            let (q, r) = num.div_rem(&den);
            debug_assert!(r.is_zero(), "CRVZ weight not integral");
            b = q;
        }
        CrvzWeights { d, w }
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    /// Applies the weights to `a_0..a_{n−1}`.
    pub fn sum(&self, a: &[Fixed]) -> Fixed {
        assert!(a.len() >= self.w.len(), "not enough terms");
        let bits = a[0].bits();
        let mut acc = Fixed::zero(bits);
        for (w, ak) in self.w.iter().zip(a) {
            acc = &acc + &ak.mul_bigint(w);
        }
        acc.div_bigint(&self.d)
    }
}

/// Number of CRVZ terms for a relative error of `10^{−digits}`: the error
/// decays like `(3+√8)^{−n}`, about 0.7655 decimal digits per term.
pub fn terms_for_digits(digits: u32) -> usize {
    (digits as f64 / 0.7655).ceil() as usize + 3
}

/// `Σ_{k≥0} (−1)^k a(k)` with `n` accelerated terms.
pub fn alternating_sum(n: usize, a: impl Fn(usize) -> Fixed) -> Fixed {
    let weights = CrvzWeights::new(n);
    let terms: Vec<Fixed> = (0..n).map(a).collect();
    weights.sum(&terms)
}
