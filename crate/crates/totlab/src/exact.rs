//! Exact accumulation of many small fractions without big-integer GCD storms.
//!
//! Sums like `sum mu(d) * (x mod d) / d^2` reach hundreds of thousands of
//! terms. A reduced big-rational accumulator would run a full-size GCD per
//! addition; instead we keep an unreduced `numer / denom` where `denom` is
//! maintained as the lcm of all term denominators seen so far. Expanding the
//! lcm only needs `gcd(denom mod d, d)` on machine words, so every addition
//! is linear in the size of the running denominator. Reduction happens once,
//! at the end, if the caller asks for a canonical rational.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Exact sum of fractions `coeff * num / den` over a running lcm denominator.
#[derive(Debug, Clone)]
pub struct FracSum {
    numer: BigInt,
    denom: BigUint,
}

impl Default for FracSum {
    fn default() -> Self {
        Self::new()
    }
}

impl FracSum {
    pub fn new() -> Self {
        FracSum {
            numer: BigInt::zero(),
            denom: BigUint::one(),
        }
    }

    /// Add `coeff * num / den` exactly. Requires `den > 0`.
    pub fn add_term(&mut self, coeff: i128, num: u128, den: u128) {
        assert!(den > 0, "zero denominator");
        if coeff == 0 || num == 0 {
            return;
        }
        let den_big = BigUint::from(den);
        let rem = (&self.denom % &den_big).to_u128().expect("rem < den");
        let g = gcd_u128(rem, den);
        let scale = den / g;
        if scale > 1 {
            let s = BigUint::from(scale);
            self.numer *= BigInt::from(s.clone());
            self.denom *= s;
        }
        let unit = &self.denom / &den_big;
        let magnitude = BigUint::from(coeff.unsigned_abs()) * BigUint::from(num) * unit;
        let sign = if coeff < 0 { Sign::Minus } else { Sign::Plus };
        self.numer += BigInt::from_biguint(sign, magnitude);
    }

    /// Add a plain integer.
    pub fn add_int(&mut self, v: i128) {
        if v != 0 {
            self.numer += BigInt::from(v) * BigInt::from(self.denom.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// True iff the accumulated value equals the integer `v`. No reduction.
    pub fn equals_int(&self, v: &BigInt) -> bool {
        self.numer == v * BigInt::from(self.denom.clone())
    }

    /// Canonical reduced rational. Runs one full-size GCD.
    pub fn into_ratio(self) -> BigRational {
        BigRational::new(self.numer, BigInt::from(self.denom))
    }

    pub fn to_ratio(&self) -> BigRational {
        self.clone().into_ratio()
    }

    /// Round to f64 without materializing a reduced fraction.
    pub fn to_f64(&self) -> f64 {
        big_ratio_to_f64(&self.numer, &BigInt::from(self.denom.clone()))
    }
}

/// `numer / denom` rounded to f64, correct even when both exceed f64 range.
pub fn big_ratio_to_f64(numer: &BigInt, denom: &BigInt) -> f64 {
    if numer.is_zero() {
        return 0.0;
    }
    let negative = numer.is_negative() != denom.is_negative();
    let n = numer.magnitude();
    let d = denom.magnitude();
    // Keep ~96 leading bits of each side; the quotient is then accurate to
    // well below one f64 ulp.
    let keep = 96u64;
    let ns = n.bits().saturating_sub(keep);
    let ds = d.bits().saturating_sub(keep);
    let n_top = (n >> ns).to_f64().unwrap_or(f64::INFINITY);
    let d_top = (d >> ds).to_f64().unwrap_or(f64::INFINITY);
    let mut v = n_top / d_top;
    let e = ns as i64 - ds as i64;
    v *= 2f64.powi(e.clamp(i32::MIN as i64, i32::MAX as i64) as i32);
    if negative {
        -v
    } else {
        v
    }
}
