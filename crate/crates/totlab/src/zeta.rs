//! Complex zeta evaluation, Bernoulli numbers and special values, the Hardy
//! Z function with zero location on the critical line, and zero-list I/O.
//!
//! zeta(s) and zeta'(s) come from one Euler-Maclaurin expansion evaluated
//! together with its term-wise derivative:
//!
//!   zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
//!           + sum_{k=1..m} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1).
//!
//! N grows with |Im s| and the correction depth m grows as Re s goes
//! negative, so the same code covers the critical strip, the real axis up to
//! the trivial zeros near -60, and everything the explicit formula needs.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::io::{BufRead, Write};
use std::sync::OnceLock;

/// Largest index in the exact Bernoulli table.
pub const BERNOULLI_MAX: usize = 64;
/// Accuracy contract region: |Im s| at most this.
pub const ZETA_IM_MAX: f64 = 150.0;
/// Accuracy contract region: Re s above this.
pub const ZETA_RE_MIN: f64 = -59.0;
/// Human-readable contract summary, exposed through the CLI version string.
pub const ZETA_CONTRACT: &str =
    "zeta contract: -59 < Re(s), |Im(s)| <= 150, s != 1, target rel. error 1e-10";

/// Exact Bernoulli numbers B_0..B_64 (B_1 = -1/2 convention).
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

impl BernoulliTable {
    pub fn new(n_max: usize) -> Self {
        let mut values: Vec<BigRational> = Vec::with_capacity(n_max + 1);
        values.push(BigRational::one());
        for m in 1..=n_max {
            // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one(); // C(m+1, 0)
            for (j, b) in values.iter().enumerate() {
                acc += b * BigRational::from_integer(binom.clone());
                binom = &binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            values.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        BernoulliTable { values }
    }

    pub fn standard() -> &'static BernoulliTable {
        static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
        TABLE.get_or_init(|| BernoulliTable::new(BERNOULLI_MAX))
    }

    pub fn get(&self, n: usize) -> Result<&BigRational> {
        self.values
            .get(n)
            .ok_or_else(|| Error::domain(format!("bernoulli: n = {n} exceeds the table")))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Exact Bernoulli number B_n for n <= 64.
pub fn bernoulli(n: usize) -> Result<BigRational> {
    Ok(BernoulliTable::standard().get(n)?.clone())
}

fn ln_table() -> &'static [f64] {
    static LN: OnceLock<Vec<f64>> = OnceLock::new();
    LN.get_or_init(|| (0..=520).map(|n| (n as f64).ln()).collect())
}

/// f64 coefficients B_{2k}/(2k)! for the Euler-Maclaurin corrections.
fn em_coeffs() -> &'static [f64] {
    static C: OnceLock<Vec<f64>> = OnceLock::new();
    C.get_or_init(|| {
        let table = BernoulliTable::standard();
        let mut fact = BigInt::one();
        let mut out = vec![0.0];
        for k in 1..=BERNOULLI_MAX / 2 {
            fact *= BigInt::from(2 * k - 1) * BigInt::from(2 * k);
            let b = table.get(2 * k).expect("table covers 2k");
            out.push(crate::exact::big_ratio_to_f64(
                b.numer(),
                &(b.denom() * &fact),
            ));
        }
        out
    })
}

/// A complex value with a heuristic truncation-error bound.
#[derive(Debug, Clone, Copy)]
pub struct ComplexEvalResult {
    pub value: Complex64,
    pub est_error: f64,
}

const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507343278686905,
    -0.13857109526572012,
    9.984_369_578_019_572e-6,
    1.5056327351493116e-7,
];

/// Principal log-gamma by the Lanczos approximation; needs Re(z) > 0.5,
/// which every reflection argument here satisfies.
fn ln_gamma(z: Complex64) -> Complex64 {
    let zm1 = z - 1.0;
    let mut a = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        a += c / (zm1 + k as f64);
    }
    let t = zm1 + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (zm1 + 0.5) * t.ln() - t + a.ln()
}

/// Digamma by upward recurrence into the Stirling region.
fn digamma(z: Complex64) -> Complex64 {
    let mut z = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < 20.0 {
        shift += 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ ln z - 1/(2z) - sum B_{2n}/(2n) z^(-2n)
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let series = inv2
        * (1.0 / 12.0
            + inv2
                * (-1.0 / 120.0
                    + inv2
                        * (1.0 / 252.0
                            + inv2
                                * (-1.0 / 240.0
                                    + inv2 * (1.0 / 132.0 + inv2 * (-691.0 / 32760.0))))));
    z.ln() - 0.5 * inv - series - shift
}

fn check_zeta_arg(s: Complex64) -> Result<()> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::domain("zeta: non-finite argument"));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::domain("zeta: pole at s = 1"));
    }
    if s.im.abs() > ZETA_IM_MAX {
        return Err(Error::domain(format!(
            "zeta: |Im s| = {} outside the contract region (max {ZETA_IM_MAX})",
            s.im.abs()
        )));
    }
    if s.re <= ZETA_RE_MIN {
        return Err(Error::domain(format!(
            "zeta: Re s = {} outside the contract region (min {ZETA_RE_MIN})",
            s.re
        )));
    }
    Ok(())
}

/// Euler-Maclaurin core: returns (zeta, zeta', first omitted term size).
fn zeta_em(s: Complex64) -> (Complex64, Complex64, f64) {
    let ln = ln_table();
    let big_n = ((2.0 * s.im.abs()).ceil() as usize + 10).max(20);
    let depth = ((((1.0 - s.re) / 2.0).ceil() as isize + 3).max(12) as usize).min(30);

    let mut sum = Complex64::new(0.0, 0.0);
    let mut dsum = Complex64::new(0.0, 0.0);
    for n in 1..big_n {
        let l = ln[n];
        let term = (-s * l).exp();
        sum += term;
        dsum -= term * l;
    }

    let ln_n = ln[big_n];
    let s1 = s - 1.0;
    let n_pow_1ms = ((1.0 - s.re) * ln_n).exp()
        * Complex64::new(0.0, -s.im * ln_n).exp();
    let tail = n_pow_1ms / s1;
    sum += tail;
    dsum += tail * (-Complex64::new(ln_n, 0.0) - 1.0 / s1);

    let n_pow_ms = n_pow_1ms / big_n as f64;
    sum += 0.5 * n_pow_ms;
    dsum += -0.5 * ln_n * n_pow_ms;

    let coeffs = em_coeffs();
    // Rising factorial P_k = s (s+1) ... (s+2k-2), carried with derivative.
    let mut p = s;
    let mut dp = Complex64::new(1.0, 0.0);
    // N^(-s-2k+1) marched down two powers per step.
    let mut npow = n_pow_ms / big_n as f64;
    let n_inv2 = 1.0 / (big_n as f64 * big_n as f64);
    for k in 1..=depth {
        let c = coeffs[k];
        sum += c * p * npow;
        dsum += c * (dp - p * ln_n) * npow;
        // extend P and dP by factors (s + 2k - 1)(s + 2k)
        let f1 = s + (2 * k - 1) as f64;
        dp = dp * f1 + p;
        p *= f1;
        let f2 = s + (2 * k) as f64;
        dp = dp * f2 + p;
        p *= f2;
        npow *= n_inv2;
    }
    let omitted = coeffs[depth + 1].abs() * p.norm() * npow.norm();
    let noise = 1e-15 * (sum.norm() + 1.0);
    (sum, dsum, omitted.max(noise))
}

/// Left-of-strip evaluation through the functional equation
/// zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s).
///
/// Direct Euler-Maclaurin loses everything to cancellation once Re s drops
/// a few units below zero (the partial sums grow like N^(1-Re s) while the
/// value stays O(1)); the reflected argument 1-s is always well conditioned.
fn zeta_reflect(s: Complex64) -> (Complex64, Complex64, f64) {
    let w = Complex64::new(1.0, 0.0) - s;
    let (z1, zp1, est1) = zeta_em(w);
    let half_pi = std::f64::consts::FRAC_PI_2;
    let sinv = (s * half_pi).sin();
    let cosv = (s * half_pi).cos();
    let ln2 = std::f64::consts::LN_2;
    let ln_pi = std::f64::consts::PI.ln();
    let prefactor = (s * ln2 + (s - 1.0) * ln_pi + ln_gamma(w)).exp();
    let value = prefactor * sinv * z1;
    let ln_2pi = ln2 + ln_pi;
    let deriv = prefactor * ((Complex64::new(ln_2pi, 0.0) - digamma(w)) * sinv + half_pi * cosv)
        * z1
        - prefactor * sinv * zp1;
    let rel = est1 / (z1.norm() + 1e-300) + 1e-13;
    (value, deriv, rel * (value.norm() + 1e-300))
}

fn zeta_core(s: Complex64) -> (Complex64, Complex64, f64) {
    if s.re < -0.5 {
        zeta_reflect(s)
    } else {
        zeta_em(s)
    }
}

/// zeta(s) by Euler-Maclaurin continuation (reflected for Re s < -1/2).
pub fn zeta(s: Complex64) -> Result<ComplexEvalResult> {
    check_zeta_arg(s)?;
    let (v, _, e) = zeta_core(s);
    Ok(ComplexEvalResult {
        value: v,
        est_error: e,
    })
}

/// zeta'(s), the term-wise analytic derivative of the same expansion.
pub fn zeta_prime(s: Complex64) -> Result<ComplexEvalResult> {
    check_zeta_arg(s)?;
    let (v, d, e) = zeta_core(s);
    let rel = if v.norm() > 0.0 { e / v.norm() } else { e };
    Ok(ComplexEvalResult {
        value: d,
        est_error: rel * (d.norm() + 1.0),
    })
}

/// zeta at a real argument.
pub fn zeta_real(x: f64) -> Result<f64> {
    Ok(zeta(Complex64::new(x, 0.0))?.value.re)
}

/// Closed-form special value families from the Bernoulli table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialKind {
    /// zeta(2n) = (-1)^(n+1) (2pi)^(2n) B_{2n} / (2 (2n)!), n >= 1.
    EvenPos,
    /// zeta(-2n-1) = -B_{2n+2}/(2n+2), n >= 0 (n = 0 gives zeta(-1) = -1/12).
    OddNeg,
    /// zeta'(-2n) = (-1)^n (2n)! zeta(2n+1) / (2 (2pi)^(2n)), n >= 1.
    PrimeEvenNeg,
}

/// Special value as an exact rational when one exists, float otherwise.
#[derive(Debug, Clone)]
pub enum SpecialValue {
    Exact(BigRational),
    Float(f64),
}

impl SpecialValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            SpecialValue::Exact(r) => crate::exact::big_ratio_to_f64(r.numer(), r.denom()),
            SpecialValue::Float(v) => *v,
        }
    }
}

/// zeta(2n) as (exact rational coefficient of (2pi)^(2n), float value).
pub fn zeta_even_pos(n: usize) -> Result<(BigRational, f64)> {
    if n < 1 {
        return Err(Error::domain("zeta_even_pos: n must be >= 1"));
    }
    if 2 * n > BERNOULLI_MAX {
        return Err(Error::domain("zeta_even_pos: out of table"));
    }
    let table = BernoulliTable::standard();
    let b = table.get(2 * n)?;
    let mut fact = BigInt::one();
    for i in 1..=2 * n {
        fact *= BigInt::from(i);
    }
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let coeff = b * BigRational::new(BigInt::from(sign), BigInt::from(2) * fact);
    let two_pi = 2.0 * std::f64::consts::PI;
    let value = crate::exact::big_ratio_to_f64(coeff.numer(), coeff.denom())
        * two_pi.powi(2 * n as i32);
    Ok((coeff, value))
}

/// zeta(-2n-1) = -B_{2n+2}/(2n+2), exact.
pub fn zeta_odd_neg(n: usize) -> Result<BigRational> {
    if 2 * n + 2 > BERNOULLI_MAX {
        return Err(Error::domain("zeta_odd_neg: out of table"));
    }
    let b = BernoulliTable::standard().get(2 * n + 2)?;
    Ok(-b / BigRational::from_integer(BigInt::from(2 * n + 2)))
}

/// zeta'(-2n) = (-1)^n (2n)! zeta(2n+1) / (2 (2pi)^(2n)), float.
pub fn zeta_prime_even_neg(n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::domain("zeta_prime_even_neg: n must be >= 1"));
    }
    if 2 * n + 2 > BERNOULLI_MAX {
        return Err(Error::domain("zeta_prime_even_neg: out of table"));
    }
    let mut fact = 1.0f64;
    for i in 1..=2 * n {
        fact *= i as f64;
    }
    let zeta_odd = zeta_real((2 * n + 1) as f64)?;
    let two_pi = 2.0 * std::f64::consts::PI;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * fact * zeta_odd / (2.0 * two_pi.powi(2 * n as i32)))
}

/// Dispatching form of the special-value families.
pub fn zeta_special(kind: SpecialKind, n: usize) -> Result<SpecialValue> {
    match kind {
        SpecialKind::EvenPos => Ok(SpecialValue::Float(zeta_even_pos(n)?.1)),
        SpecialKind::OddNeg => Ok(SpecialValue::Exact(zeta_odd_neg(n)?)),
        SpecialKind::PrimeEvenNeg => Ok(SpecialValue::Float(zeta_prime_even_neg(n)?)),
    }
}

/// Riemann-Siegel theta by its asymptotic series with two corrections:
/// theta(t) = t/2 log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3).
///
/// The series delivers < 1e-9 for t >= 10. Below that its truncation error
/// (about 1e-3 radians at t = 2) breaks the |Z| = |zeta| contract, so small
/// arguments fall back to the exact phase Im log Gamma(1/4 + it/2).
pub fn riemann_siegel_theta(t: f64) -> f64 {
    if t < 10.0 {
        let z = Complex64::new(0.25, 0.5 * t);
        // ln Gamma(z) via the recurrence into the Lanczos-safe region.
        let lg = ln_gamma(z + 1.0) - z.ln();
        return lg.im - 0.5 * t * std::f64::consts::PI.ln();
    }
    let half_t = 0.5 * t;
    half_t * (t / (2.0 * std::f64::consts::PI)).ln() - half_t - std::f64::consts::PI / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t * t * t)
}

/// Hardy Z(t) = Re(e^{i theta(t)} zeta(1/2 + it)); real with the sign
/// changes of zeta on the critical line.
pub fn hardy_z(t: f64) -> Result<f64> {
    if !(2.0..=ZETA_IM_MAX).contains(&t) {
        return Err(Error::domain(format!(
            "hardy_z: t = {t} outside [2, {ZETA_IM_MAX}]"
        )));
    }
    let z = zeta(Complex64::new(0.5, t))?.value;
    let theta = riemann_siegel_theta(t);
    Ok((Complex64::new(0.0, theta).exp() * z).re)
}

/// Provenance of a zero ordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroSource {
    Located,
    Loaded,
}

/// A nontrivial zero rho = 1/2 + it, indexed by rank of its ordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaZero {
    pub index: u32,
    pub t: f64,
    pub source: ZeroSource,
}

const ZERO_GRID_STEP: f64 = 0.05;
const ZERO_BRACKET_TOL: f64 = 1e-8;
const ZERO_SCAN_START: f64 = 2.0;

/// Locate every critical-line zero with ordinate in (0, t_max] by scanning
/// Hardy Z on a 0.05 grid and bisecting each sign change to 1e-8.
pub fn find_zeros(t_max: f64) -> Result<Vec<ZetaZero>> {
    if !(10.0..=ZETA_IM_MAX).contains(&t_max) {
        return Err(Error::domain(format!(
            "find_zeros: t_max = {t_max} outside [10, {ZETA_IM_MAX}]"
        )));
    }
    let steps = ((t_max - ZERO_SCAN_START) / ZERO_GRID_STEP).floor() as usize;
    let grid: Vec<f64> = (0..=steps)
        .map(|i| ZERO_SCAN_START + i as f64 * ZERO_GRID_STEP)
        .collect();
    let values: Vec<f64> = grid
        .par_iter()
        .map(|&t| hardy_z(t))
        .collect::<Result<_>>()?;

    let mut brackets = Vec::new();
    for i in 0..steps {
        if values[i] == 0.0 {
            brackets.push((grid[i], grid[i]));
        } else if values[i] * values[i + 1] < 0.0 {
            brackets.push((grid[i], grid[i + 1]));
        }
    }

    let ordinates: Vec<f64> = brackets
        .into_par_iter()
        .map(|(mut lo, mut hi)| -> Result<f64> {
            if lo == hi {
                return Ok(lo);
            }
            let mut f_lo = hardy_z(lo)?;
            while hi - lo > ZERO_BRACKET_TOL {
                let mid = 0.5 * (lo + hi);
                let f_mid = hardy_z(mid)?;
                if f_mid == 0.0 {
                    return Ok(mid);
                }
                if f_lo * f_mid < 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    f_lo = f_mid;
                }
            }
            Ok(0.5 * (lo + hi))
        })
        .collect::<Result<_>>()?;

    Ok(ordinates
        .into_iter()
        .filter(|&t| t <= t_max)
        .enumerate()
        .map(|(i, t)| ZetaZero {
            index: i as u32 + 1,
            t,
            source: ZeroSource::Located,
        })
        .collect())
}

/// Smooth main term of the zero-counting function:
/// (T/2pi) log(T/2pi) - T/2pi + 7/8.
pub fn count_zeros_formula(t: f64) -> Result<f64> {
    if t < 2.0 {
        return Err(Error::domain("count_zeros_formula: T must be >= 2"));
    }
    let u = t / (2.0 * std::f64::consts::PI);
    Ok(u * u.ln() - u + 7.0 / 8.0)
}

/// Parse a zeros file: one ascending decimal ordinate per line, '#' comments
/// and blank lines ignored. Ordinates within the Hardy contract region are
/// verified to actually sit on a sign change of Z.
pub fn read_zeros<R: BufRead>(r: R) -> Result<Vec<ZetaZero>> {
    let mut out: Vec<ZetaZero> = Vec::new();
    for (lineno, line) in r.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let t: f64 = trimmed.parse().map_err(|e| {
            Error::format(format!("zeros file line {}: {e}", lineno + 1))
        })?;
        if !t.is_finite() || t <= 0.0 {
            return Err(Error::validation(format!(
                "zeros file line {}: ordinate must be positive, got {t}",
                lineno + 1
            )));
        }
        if let Some(prev) = out.last() {
            if t <= prev.t {
                return Err(Error::validation(format!(
                    "zeros file line {}: ordinates must be strictly increasing",
                    lineno + 1
                )));
            }
        }
        out.push(ZetaZero {
            index: out.len() as u32 + 1,
            t,
            source: ZeroSource::Loaded,
        });
    }
    for z in &out {
        if z.t >= 2.0 && z.t <= ZETA_IM_MAX {
            let v = hardy_z(z.t)?;
            if v.abs() > 1e-3 {
                return Err(Error::validation(format!(
                    "zeros file: |Z({})| = {:.3e} is too large for a zero",
                    z.t,
                    v.abs()
                )));
            }
        } else if z.t < 2.0 {
            return Err(Error::validation(format!(
                "zeros file: ordinate {} below the first zero",
                z.t
            )));
        }
    }
    Ok(out)
}

/// Load a zeros file from disk.
pub fn load_zeros(path: &std::path::Path) -> Result<Vec<ZetaZero>> {
    let f = std::fs::File::open(path)?;
    read_zeros(std::io::BufReader::new(f))
}

/// Emit ordinates in the format `read_zeros` accepts.
pub fn write_zeros<W: Write>(zeros: &[ZetaZero], mut w: W) -> Result<()> {
    writeln!(w, "# critical-line zero ordinates, ascending")?;
    for z in zeros {
        writeln!(w, "{:.15}", z.t)?;
    }
    Ok(())
}

/// The first 29 ordinates (everything below t = 100), regenerated by
/// `zeros-find --emit` and checked in as a fixture.
pub fn default_zeros() -> Vec<ZetaZero> {
    static ZEROS: OnceLock<Vec<ZetaZero>> = OnceLock::new();
    ZEROS
        .get_or_init(|| {
            read_zeros(std::io::Cursor::new(include_str!(
                "../data/zeros_first29.txt"
            )))
            .expect("embedded zeros fixture parses")
        })
        .clone()
}
