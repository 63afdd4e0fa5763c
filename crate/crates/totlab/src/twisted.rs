//! Fractional-part sums, their Mobius-twisted variants, and the five-term
//! decomposition of Phi(x) they assemble into.
//!
//! At an integer argument x the fractional part ((x/d)) equals
//! (x mod d)/d exactly, so every sum here is evaluated in exact rational
//! arithmetic; floating point would cancel away precisely the structure these
//! sums exist to expose. Float fallbacks use compensated or double-double
//! accumulation and are checked against the exact mode in tests.

use crate::error::{Error, Result};
use crate::exact::FracSum;
use crate::kahan::{dd_three_over_pi_sq, Dd, KahanSum};
use crate::summatory::BRUTE_MAX;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Upper bound for the exact-rational mode of the Lemma-style sums.
pub const EXACT_MAX: u64 = 10_000_000;
/// Upper bound for the exact five-term decomposition.
pub const DECOMPOSE_MAX: u64 = 1_000_000;

/// Euler's constant gamma = lim (H_x - log x).
pub const EULER_GAMMA: f64 = 0.5772156649015329;

/// Reduced fractional part ((x/d)) = (x mod d)/d at integer arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FracValue {
    numer: u64,
    denom: u64,
}

impl FracValue {
    /// ((x/d)) for integer x and d >= 1, in lowest terms.
    pub fn frac_part(x: u64, d: u64) -> Self {
        assert!(d >= 1, "zero denominator");
        let r = x % d;
        if r == 0 {
            return FracValue { numer: 0, denom: 1 };
        }
        let g = gcd(r, d);
        FracValue {
            numer: r / g,
            denom: d / g,
        }
    }

    pub fn numer(&self) -> u64 {
        self.numer
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.numer as f64 / self.denom as f64
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

fn check_exact_arg(name: &str, x: u64) -> Result<()> {
    if x == 0 {
        return Err(Error::domain(format!("{name}: x must be >= 1")));
    }
    if x > EXACT_MAX {
        return Err(Error::domain(format!(
            "{name}: x = {x} exceeds the exact-mode bound {EXACT_MAX}"
        )));
    }
    Ok(())
}

fn check_float_arg(name: &str, x: u64) -> Result<()> {
    if x == 0 {
        return Err(Error::domain(format!("{name}: x must be >= 1")));
    }
    if x > BRUTE_MAX {
        return Err(Error::domain(format!(
            "{name}: x = {x} exceeds the float-mode bound {BRUTE_MAX}"
        )));
    }
    Ok(())
}

/// sum_{n <= x} ((x/n)) as an exact rational.
pub fn frac_part_sum(x: u64) -> Result<BigRational> {
    check_exact_arg("frac_part_sum", x)?;
    let mut acc = FracSum::new();
    for n in 1..=x {
        acc.add_term(1, u128::from(x % n), u128::from(n));
    }
    Ok(acc.into_ratio())
}

/// sum_{n <= x} ((x/n)) in compensated floating point.
pub fn frac_part_sum_float(x: u64) -> Result<f64> {
    check_float_arg("frac_part_sum", x)?;
    let mut k = KahanSum::new();
    for n in 1..=x {
        k.add((x % n) as f64 / n as f64);
    }
    Ok(k.value())
}

/// sum_{n <= x} ((x/n))/n in compensated floating point.
///
/// Note this literal weighted sum grows like (log x)/2; the quantity with
/// the 1 - gamma limit is the mean fractional part, i.e. frac_part_sum(x)/x.
pub fn frac_part_weighted_sum(x: u64) -> Result<f64> {
    check_float_arg("frac_part_weighted_sum", x)?;
    let mut k = KahanSum::new();
    for n in 1..=x {
        let n_f = n as f64;
        k.add((x % n) as f64 / (n_f * n_f));
    }
    Ok(k.value())
}

/// Streams mu(d) over [1, x] in segments and feeds each (d, mu) to `f`.
fn for_each_mu(x: u64, mut f: impl FnMut(u64, i8)) -> Result<()> {
    let chunk = 1u64 << 21;
    let mut a = 1u64;
    while a <= x {
        let b = (a + chunk - 1).min(x);
        let t = crate::arith::sieve_segment_capped(a, b, chunk as usize)?;
        for (i, &m) in t.mu.iter().enumerate() {
            f(a + i as u64, m);
        }
        a = b + 1;
    }
    Ok(())
}

/// sum_{n <= x} mu(n) ((x/n)) as an exact rational.
pub fn mobius_frac_sum(x: u64) -> Result<BigRational> {
    check_exact_arg("mobius_frac_sum", x)?;
    let mut acc = FracSum::new();
    for_each_mu(x, |n, m| {
        if m != 0 {
            acc.add_term(i128::from(m), u128::from(x % n), u128::from(n));
        }
    })?;
    Ok(acc.into_ratio())
}

/// sum_{n <= x} mu(n) ((x/n)) in compensated floating point.
pub fn mobius_frac_sum_float(x: u64) -> Result<f64> {
    check_float_arg("mobius_frac_sum", x)?;
    let mut k = KahanSum::new();
    for_each_mu(x, |n, m| {
        if m != 0 {
            k.add(f64::from(m) * ((x % n) as f64 / n as f64));
        }
    })?;
    Ok(k.value())
}

/// sum_{n <= x} mu(n) ((x/n)) / n as an exact rational.
pub fn mobius_frac_weighted_sum(x: u64) -> Result<BigRational> {
    check_exact_arg("mobius_frac_weighted_sum", x)?;
    let mut acc = FracSum::new();
    for_each_mu(x, |n, m| {
        if m != 0 {
            acc.add_term(
                i128::from(m),
                u128::from(x % n),
                u128::from(n) * u128::from(n),
            );
        }
    })?;
    Ok(acc.into_ratio())
}

/// sum_{n <= x} mu(n) ((x/n)) / n in compensated floating point.
pub fn mobius_frac_weighted_sum_float(x: u64) -> Result<f64> {
    check_float_arg("mobius_frac_weighted_sum", x)?;
    let mut k = KahanSum::new();
    for_each_mu(x, |n, m| {
        if m != 0 {
            let n_f = n as f64;
            k.add(f64::from(m) * ((x % n) as f64 / (n_f * n_f)));
        }
    })?;
    Ok(k.value())
}

/// k-th twisted moment sum_{n <= x} mu(n) ((x/n))^k, exact, for 1 <= k <= 4.
pub fn mobius_frac_moment(x: u64, k: u32) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::domain("mobius_frac_moment: k must be >= 1"));
    }
    if k > 4 {
        return Err(Error::domain(
            "mobius_frac_moment: k > 4 exceeds the rational budget",
        ));
    }
    check_exact_arg("mobius_frac_moment", x)?;
    let mut acc = FracSum::new();
    for_each_mu(x, |n, m| {
        if m != 0 {
            let r = u128::from(x % n);
            let d = u128::from(n);
            acc.add_term(i128::from(m), r.pow(k), d.pow(k));
        }
    })?;
    Ok(acc.into_ratio())
}

/// sum_{n <= x} phi(n) ((x/n)) as an exact rational.
pub fn phi_frac_sum(x: u64) -> Result<BigRational> {
    check_exact_arg("phi_frac_sum", x)?;
    let chunk = 1u64 << 21;
    let mut acc = FracSum::new();
    let mut a = 1u64;
    while a <= x {
        let b = (a + chunk - 1).min(x);
        let t = crate::arith::sieve_segment_capped(a, b, chunk as usize)?;
        for (i, &p) in t.phi.iter().enumerate() {
            let n = a + i as u64;
            acc.add_term(1, u128::from(p) * u128::from(x % n), u128::from(n));
        }
        a = b + 1;
    }
    Ok(acc.into_ratio())
}

/// The five exact terms whose sum reconstructs Phi(x):
///
///   Phi(x) = x^2/2 sum mu(d)/d^2  +  x/2 sum mu(d)/d
///          - x sum mu(d)((x/d))/d - 1/2 sum mu(d)((x/d))
///          + 1/2 sum mu(d)((x/d))^2.
#[derive(Debug, Clone)]
pub struct DecompositionBreakdown {
    pub x: u64,
    pub term_main: BigRational,
    pub term_half: BigRational,
    pub term_weighted: BigRational,
    pub term_frac: BigRational,
    pub term_sq: BigRational,
    pub total: BigRational,
}

/// Exact five-term decomposition of Phi(x).
///
/// The total is assembled per divisor as mu(d) q(q+1)/2 in integers (the
/// grouped form of the same expansion), so `total == sum of terms` is a
/// genuine cross-check rather than a tautology; tests verify both that and
/// `total == Phi(x)` against the sieve route.
pub fn decompose_phi_sum(x: u64) -> Result<DecompositionBreakdown> {
    if x == 0 {
        return Err(Error::domain("decompose_phi_sum: x must be >= 1"));
    }
    if x > DECOMPOSE_MAX {
        return Err(Error::resource(format!(
            "decompose_phi_sum: x = {x} exceeds the rational-arithmetic budget {DECOMPOSE_MAX}"
        )));
    }
    let mut a_sum = FracSum::new(); // mu/d^2
    let mut b_sum = FracSum::new(); // mu/d
    let mut c_sum = FracSum::new(); // mu r/d^2
    let mut d_sum = FracSum::new(); // mu r/d
    let mut e_sum = FracSum::new(); // mu r^2/d^2
    let mut total: i128 = 0;
    for_each_mu(x, |d, m| {
        if m == 0 {
            return;
        }
        let m_i = i128::from(m);
        let r = x % d;
        let q = x / d;
        let d2 = u128::from(d) * u128::from(d);
        a_sum.add_term(m_i, 1, d2);
        b_sum.add_term(m_i, 1, u128::from(d));
        c_sum.add_term(m_i, u128::from(r), d2);
        d_sum.add_term(m_i, u128::from(r), u128::from(d));
        e_sum.add_term(m_i, u128::from(r) * u128::from(r), d2);
        total += m_i * ((q as i128) * (q as i128 + 1) / 2);
    })?;

    let x_big = BigInt::from(x);
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let x_rat = BigRational::from_integer(x_big.clone());
    let term_main = a_sum.into_ratio() * &x_rat * &x_rat * &half;
    let term_half = b_sum.into_ratio() * &x_rat * &half;
    let term_weighted = -(c_sum.into_ratio() * &x_rat);
    let term_frac = -(d_sum.into_ratio() * &half);
    let term_sq = e_sum.into_ratio() * &half;
    Ok(DecompositionBreakdown {
        x,
        term_main,
        term_half,
        term_weighted,
        term_frac,
        term_sq,
        total: BigRational::from_integer(BigInt::from(total)),
    })
}

impl DecompositionBreakdown {
    /// Sum of the five terms; equals `total` when the expansion is healthy.
    pub fn recombined(&self) -> BigRational {
        &self.term_main + &self.term_half + &self.term_weighted + &self.term_frac + &self.term_sq
    }
}

/// R(x) = Phi(x) - 3x^2/pi^2 through the five-term float decomposition.
///
/// Every per-divisor fraction is formed in double-double before summing, so
/// the x^2-scale cancellation against 3x^2/pi^2 leaves ~20 clean digits.
/// This is the independent route behind the dual-path check in `error_term`.
pub fn remainder_via_decomposition(x: u64) -> Result<f64> {
    check_float_arg("remainder_via_decomposition", x)?;
    let mut a_sum = Dd::ZERO;
    let mut b_sum = Dd::ZERO;
    let mut c_sum = Dd::ZERO;
    let mut d_sum = Dd::ZERO;
    let mut e_sum = Dd::ZERO;
    for_each_mu(x, |d, m| {
        if m == 0 {
            return;
        }
        let m_f = f64::from(m);
        let d_f = d as f64;
        let r_f = (x % d) as f64;
        let inv_d = Dd::from_f64(1.0).div(Dd::from_f64(d_f));
        let inv_d2 = inv_d.mul(inv_d);
        a_sum = a_sum.add(inv_d2.mul_f64(m_f));
        b_sum = b_sum.add(inv_d.mul_f64(m_f));
        c_sum = c_sum.add(inv_d2.mul_f64(m_f * r_f));
        d_sum = d_sum.add(inv_d.mul_f64(m_f * r_f));
        e_sum = e_sum.add(inv_d2.mul_f64(m_f * r_f * r_f));
    })?;
    let x_f = x as f64;
    let x_sq = Dd::from_f64(x_f).mul(Dd::from_f64(x_f));
    let mut r = x_sq.mul(a_sum).mul_f64(0.5);
    r = r.add(b_sum.mul_f64(0.5 * x_f));
    r = r.sub(c_sum.mul_f64(x_f));
    r = r.sub(d_sum.mul_f64(0.5));
    r = r.add(e_sum.mul_f64(0.5));
    r = r.sub(x_sq.mul(dd_three_over_pi_sq()));
    Ok(r.to_f64())
}
