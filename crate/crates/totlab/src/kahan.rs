//! Compensated summation and a small double-double accumulator.
//!
//! Partial sums of twisted fractional series cancel heavily: the signal can
//! sit 10 or more orders of magnitude below the individual terms. Plain f64
//! accumulation would drown it in rounding noise, so every float summation in
//! this crate goes through one of the two accumulators here.

/// Kahan–Babuška compensated sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    err: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let y = x - self.err;
        let t = self.sum + y;
        self.err = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Error-free transformation: `a + b = s + e` exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free transformation: `a * b = p + e` exactly (via fused multiply-add).
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

/// Unevaluated double-double value `hi + lo` with `|lo| <= ulp(hi)/2`.
///
/// Gives ~31 significant digits, enough to subtract `3x^2/pi^2` from an
/// `O(x^2)` accumulation at `x = 10^6` and keep the `O(x)` remainder clean.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    fn renorm(hi: f64, lo: f64) -> Self {
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn add_f64(self, x: f64) -> Self {
        let (s, e) = two_sum(self.hi, x);
        Dd::renorm(s, e + self.lo)
    }

    #[inline]
    pub fn add(self, rhs: Dd) -> Self {
        let (s, e) = two_sum(self.hi, rhs.hi);
        Dd::renorm(s, e + self.lo + rhs.lo)
    }

    #[inline]
    pub fn sub(self, rhs: Dd) -> Self {
        self.add(Dd {
            hi: -rhs.hi,
            lo: -rhs.lo,
        })
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Self {
        let (p, e) = two_prod(self.hi, x);
        Dd::renorm(p, e + self.lo * x)
    }

    #[inline]
    pub fn mul(self, rhs: Dd) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        Dd::renorm(p, e + self.hi * rhs.lo + self.lo * rhs.hi)
    }

    /// Newton step on the reciprocal keeps full double-double accuracy.
    pub fn div(self, rhs: Dd) -> Self {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul_f64(q1));
        let q2 = r.hi / rhs.hi;
        let r2 = r.sub(rhs.mul_f64(q2));
        let q3 = r2.hi / rhs.hi;
        Dd::renorm(q1, q2 + q3)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// `pi` as a double-double (`lo` is the classic correction term).
pub const DD_PI: Dd = Dd {
    hi: std::f64::consts::PI,
    lo: 1.2246467991473532e-16,
};

/// `3 / pi^2` to double-double accuracy.
pub fn dd_three_over_pi_sq() -> Dd {
    Dd::from_f64(3.0).div(DD_PI.mul(DD_PI))
}

/// `6 / pi^2` to double-double accuracy.
pub fn dd_six_over_pi_sq() -> Dd {
    Dd::from_f64(6.0).div(DD_PI.mul(DD_PI))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_recovers_small_terms() {
        let mut k = KahanSum::new();
        k.add(1.0);
        for _ in 0..10_000_000 {
            k.add(1e-16);
        }
        // Plain f64 would stay at 1.0 exactly; Kahan keeps the tail.
        assert!((k.value() - (1.0 + 1e-9)).abs() < 1e-12);
    }

    #[test]
    fn two_sum_is_exact() {
        let (s, e) = two_sum(1e16, 1.0);
        assert_eq!(s + e, 1e16 + 1.0);
        assert_eq!(e, 1.0 - ((1e16 + 1.0) - 1e16));
    }

    #[test]
    fn dd_mul_div_roundtrip() {
        let a = Dd::from_f64(1.0).div(Dd::from_f64(3.0));
        let b = a.mul_f64(3.0);
        assert!((b.to_f64() - 1.0).abs() < 1e-30);
        assert!(b.sub(Dd::from_f64(1.0)).hi.abs() < 1e-30);
    }

    #[test]
    fn dd_pi_squared_constant() {
        let pisq = DD_PI.mul(DD_PI);
        // pi^2 = 9.869604401089358618834...
        assert!((pisq.hi - 9.869604401089358).abs() < 1e-15);
        let three = dd_three_over_pi_sq();
        // 3/pi^2 = 0.30396355092701331433...
        assert!((three.to_f64() - 0.303963550927013).abs() < 1e-15);
    }
}
