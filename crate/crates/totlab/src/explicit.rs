//! The truncated explicit formula for Phi(x): main term 3x^2/pi^2, constant
//! 1/6, a sum over nontrivial zeros, and the rapidly convergent trivial-zero
//! series; plus a direct Perron line-integral cross-check.

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::zeta::{
    zeta, zeta_odd_neg, zeta_prime, zeta_prime_even_neg, zeta_real, ZetaZero, ZETA_IM_MAX,
};
use num_complex::Complex64;
use rayon::prelude::*;

/// Trivial-series terms available from the exact special-value table.
pub const TRIVIAL_TERMS_MAX: usize = 31;

/// Minimal distance from an integer for explicit-formula arguments.
pub const INTEGER_GUARD: f64 = 1e-6;

/// One trivial-zero term in residue form:
/// `zeta(-2n-1) / (2n zeta'(-2n))`, from the closed special values.
pub fn trivial_term_coefficient(n: usize) -> Result<f64> {
    if !(1..=TRIVIAL_TERMS_MAX).contains(&n) {
        return Err(Error::domain(format!(
            "trivial_term_coefficient: n = {n} outside [1, {TRIVIAL_TERMS_MAX}]"
        )));
    }
    let zeta_odd = zeta_odd_neg(n)?; // zeta(-2n-1), exact
    let zp = zeta_prime_even_neg(n)?; // zeta'(-2n), float
    let num = crate::exact::big_ratio_to_f64(zeta_odd.numer(), zeta_odd.denom());
    Ok(num / (2.0 * n as f64 * zp))
}

/// Residue-form trivial-zero series sum_{n=1}^{n_max} x^{-2n} c_n with
/// c_n = zeta(-2n-1)/(2n zeta'(-2n)). Enters the explicit total subtracted.
pub fn trivial_zero_series(x: f64, n_max: usize) -> Result<f64> {
    if !x.is_finite() || x <= 1.0 {
        return Err(Error::domain("trivial_zero_series: x must be > 1"));
    }
    if n_max > TRIVIAL_TERMS_MAX {
        return Err(Error::domain(format!(
            "trivial_zero_series: n_max = {n_max} exceeds the table ({TRIVIAL_TERMS_MAX})"
        )));
    }
    let mut k = KahanSum::new();
    let inv_x2 = 1.0 / (x * x);
    let mut xpow = 1.0;
    for n in 1..=n_max {
        xpow *= inv_x2;
        k.add(xpow * trivial_term_coefficient(n)?);
    }
    Ok(k.value())
}

/// The alternative printed coefficient form of the trivial-zero series,
/// `(-1)^n (2n+1) zeta(2n+2) x^{-2n} / ((2pi)^2 n (n+1) zeta(2n+1))`,
/// retained for comparison against the residue form; the two genuinely
/// differ (sign pattern and an overall 2(n+1) factor per term).
pub fn trivial_zero_series_alt(x: f64, n_max: usize) -> Result<f64> {
    if !x.is_finite() || x <= 1.0 {
        return Err(Error::domain("trivial_zero_series_alt: x must be > 1"));
    }
    if n_max > TRIVIAL_TERMS_MAX {
        return Err(Error::domain(format!(
            "trivial_zero_series_alt: n_max = {n_max} exceeds the table ({TRIVIAL_TERMS_MAX})"
        )));
    }
    let four_pi_sq = (2.0 * std::f64::consts::PI).powi(2);
    let mut k = KahanSum::new();
    let inv_x2 = 1.0 / (x * x);
    let mut xpow = 1.0;
    for n in 1..=n_max {
        xpow *= inv_x2;
        let nf = n as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * (2.0 * nf + 1.0) * zeta_real(2.0 * nf + 2.0)?
            / (four_pi_sq * nf * (nf + 1.0) * zeta_real(2.0 * nf + 1.0)?);
        k.add(xpow * term);
    }
    Ok(k.value())
}

/// Per-zero data for the explicit formula: the ordinate together with the
/// residue coefficient `zeta(rho - 1) / (rho zeta'(rho))` at rho = 1/2 + it.
#[derive(Debug, Clone)]
pub struct ZeroSumContext {
    entries: Vec<(f64, Complex64)>,
}

impl ZeroSumContext {
    /// Evaluates both zeta factors once per zero. Rejects zeros outside the
    /// zeta contract region and numerically degenerate (non-simple) zeros.
    pub fn new(zeros: &[ZetaZero]) -> Result<Self> {
        let mut entries = Vec::with_capacity(zeros.len());
        for z in zeros {
            if z.t <= 0.0 || z.t > ZETA_IM_MAX {
                return Err(Error::domain(format!(
                    "zero_sum: ordinate {} outside the zeta contract region",
                    z.t
                )));
            }
            let rho = Complex64::new(0.5, z.t);
            let zp = zeta_prime(rho)?.value;
            if zp.norm() < 1e-6 {
                return Err(Error::internal(format!(
                    "zero_sum: |zeta'(rho)| = {:.2e} at t = {}; simplicity hypothesis \
                     violated numerically",
                    zp.norm(),
                    z.t
                )));
            }
            let numer = zeta(rho - Complex64::new(1.0, 0.0))?.value;
            entries.push((z.t, numer / (rho * zp)));
        }
        Ok(ZeroSumContext { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// sum over zeros of x^rho zeta(rho-1)/(rho zeta'(rho)), taken as
    /// 2 Re(...) over the upper zeros in increasing-t order, compensated.
    pub fn zero_sum(&self, x: f64) -> f64 {
        let sqrt_x = x.sqrt();
        let ln_x = x.ln();
        let mut k = KahanSum::new();
        for &(t, c) in &self.entries {
            let phase = Complex64::new(0.0, t * ln_x).exp();
            k.add(2.0 * sqrt_x * (phase * c).re);
        }
        k.value()
    }

    /// Same sum assembled from explicit conjugate pairs, as complex numbers.
    /// The imaginary part measures how well conjugate symmetry cancels.
    pub fn zero_sum_paired(&self, x: f64) -> Complex64 {
        let sqrt_x = x.sqrt();
        let ln_x = x.ln();
        let mut acc = Complex64::new(0.0, 0.0);
        for &(t, c) in &self.entries {
            let up = Complex64::new(0.0, t * ln_x).exp() * c;
            let down = Complex64::new(0.0, -t * ln_x).exp() * c.conj();
            acc += sqrt_x * (up + down);
        }
        acc
    }
}

/// Convenience wrapper building a throwaway context.
pub fn zero_sum(x: f64, zeros: &[ZetaZero]) -> Result<f64> {
    if !x.is_finite() || x <= 1.0 {
        return Err(Error::domain("zero_sum: x must be > 1"));
    }
    Ok(ZeroSumContext::new(zeros)?.zero_sum(x))
}

/// The assembled truncated explicit formula at one argument.
#[derive(Debug, Clone)]
pub struct ExplicitEvaluation {
    pub x: f64,
    pub main_term: f64,
    pub constant_term: f64,
    pub zero_sum: f64,
    pub trivial_series: f64,
    pub total: f64,
    pub zeros_used: usize,
    pub trivial_terms_used: usize,
}

/// Truncated explicit formula
/// `3x^2/pi^2 + 1/6 + sum_rho x^rho zeta(rho-1)/(rho zeta'(rho)) - trivial`.
///
/// Requires a non-integer x (the underlying identity jumps at integers;
/// exact values at integers come from the summatory module instead).
pub fn phi_sum_explicit(
    x: f64,
    zeros: &[ZetaZero],
    n_max: usize,
) -> Result<ExplicitEvaluation> {
    let ctx = ZeroSumContext::new(zeros)?;
    phi_sum_explicit_with(x, &ctx, n_max)
}

/// Same as [`phi_sum_explicit`] against a prebuilt [`ZeroSumContext`].
pub fn phi_sum_explicit_with(
    x: f64,
    ctx: &ZeroSumContext,
    n_max: usize,
) -> Result<ExplicitEvaluation> {
    if !x.is_finite() || x <= 1.0 {
        return Err(Error::domain("phi_sum_explicit: x must be > 1"));
    }
    if (x - x.round()).abs() < INTEGER_GUARD {
        return Err(Error::domain(
            "phi_sum_explicit: x is (numerically) an integer; use the exact summatory \
             routes for integer arguments",
        ));
    }
    let pi = std::f64::consts::PI;
    let main_term = 3.0 * x * x / (pi * pi);
    let constant_term = 1.0 / 6.0;
    let zs = ctx.zero_sum(x);
    let ts = trivial_zero_series(x, n_max)?;
    Ok(ExplicitEvaluation {
        x,
        main_term,
        constant_term,
        zero_sum: zs,
        trivial_series: ts,
        total: main_term + constant_term + zs - ts,
        zeros_used: ctx.len(),
        trivial_terms_used: n_max,
    })
}

/// Truncated oscillating sum over zeros with its cutoff height.
#[derive(Debug, Clone, Copy)]
pub struct OscillationValue {
    pub x: f64,
    pub t: f64,
    pub value: Complex64,
}

/// sum_{|Im rho| <= T} x^rho / rho over full conjugate pairs. The imaginary
/// part of the result is a cancellation diagnostic and stays at rounding
/// level; the real part is the oscillating term measured against sqrt(x).
pub fn oscillation_sum(x: f64, zeros: &[ZetaZero]) -> Result<OscillationValue> {
    if !x.is_finite() || x <= 1.0 {
        return Err(Error::domain("oscillation_sum: x must be > 1"));
    }
    let sqrt_x = x.sqrt();
    let ln_x = x.ln();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut t_max = 0.0f64;
    for z in zeros {
        if z.t <= 0.0 || z.t > ZETA_IM_MAX {
            return Err(Error::domain(format!(
                "oscillation_sum: ordinate {} outside the zeta contract region",
                z.t
            )));
        }
        let rho = Complex64::new(0.5, z.t);
        let up = Complex64::new(0.0, z.t * ln_x).exp() / rho;
        let down = Complex64::new(0.0, -z.t * ln_x).exp() / rho.conj();
        acc += sqrt_x * (up + down);
        t_max = t_max.max(z.t);
    }
    Ok(OscillationValue {
        x,
        t: t_max,
        value: acc,
    })
}

/// Perron line integral `(1/2 pi i) int zeta(s-1)/zeta(s) x^s / s ds` along
/// `Re s = sigma0`, truncated at `|Im s| <= T`, by the trapezoid rule.
///
/// Converges (slowly, at rate ~x^sigma0/T) to Phi(x), with the last term
/// carrying weight 1/2 when x is an integer.
pub fn perron_phi(x: f64, sigma0: f64, t_limit: f64, step: f64) -> Result<f64> {
    if !x.is_finite() || x <= 1.0 {
        return Err(Error::domain("perron_phi: x must be > 1"));
    }
    if sigma0 < 2.2 {
        return Err(Error::domain(
            "perron_phi: sigma0 must be >= 2.2 (inside absolute convergence)",
        ));
    }
    if !step.is_finite() || step <= 0.0 || step > 0.05 {
        return Err(Error::domain("perron_phi: step must lie in (0, 0.05]"));
    }
    if !t_limit.is_finite() || t_limit <= 0.0 || t_limit > 140.0 {
        return Err(Error::domain(
            "perron_phi: T must lie in (0, 140] (zeta contract region)",
        ));
    }
    let n_steps = (t_limit / step).ceil() as usize;
    let ln_x = x.ln();
    // Integrand is conjugate-symmetric in t, so integrate t in [0, T] and
    // keep the real part: result = (1/pi) int_0^T Re F(sigma0 + it) dt.
    let samples: Vec<f64> = (0..=n_steps)
        .into_par_iter()
        .map(|i| -> Result<f64> {
            let t = (i as f64 * step).min(t_limit);
            let s = Complex64::new(sigma0, t);
            let num = zeta(s - Complex64::new(1.0, 0.0))?.value;
            let den = zeta(s)?.value;
            let x_pow = (s * ln_x).exp();
            Ok((num / den * x_pow / s).re)
        })
        .collect::<Result<_>>()?;
    let mut k = KahanSum::new();
    for i in 0..n_steps {
        let t0 = (i as f64) * step;
        let t1 = ((i + 1) as f64 * step).min(t_limit);
        k.add(0.5 * (samples[i] + samples[i + 1]) * (t1 - t0));
    }
    Ok(k.value() / std::f64::consts::PI)
}
