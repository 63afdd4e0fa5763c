//! Error-term measurement: R(x) = Phi(x) - 3x^2/pi^2, the normalized
//! f(x) = R(x)/(sqrt(x) log^2 x), the pointwise r(n), streaming scans with
//! CSV output, and local-jump statistics of phi.
//!
//! Phi values stay exact integers throughout; the only floating point is the
//! final subtraction of the main term, done in double-double because Phi(x)
//! exceeds 2^53 long before the scans stop being interesting.

use crate::arith::{factorize, sieve_segment_capped};
use crate::error::{Error, Result};
use crate::kahan::{dd_six_over_pi_sq, dd_three_over_pi_sq, Dd};
use crate::summatory::{phi_sum_fast, SummatoryCache, BRUTE_MAX, FAST_MAX};
use crate::twisted::remainder_via_decomposition;
use rayon::prelude::*;
use std::io::Write;

/// Max number of retained samples per scan.
pub const SCAN_SAMPLE_CAP: u64 = 10_000_000;

const CHUNK: u64 = 1 << 21;

/// Split an exact i128 into an (exact) double-double.
fn dd_from_i128(v: i128) -> Dd {
    let hi = v as f64;
    let lo = (v - hi as i128) as f64;
    Dd { hi, lo }.add_f64(0.0)
}

/// R(x) from an already-known exact Phi(x).
fn remainder_from_phi(x: u64, phi: i128) -> f64 {
    let x_f = x as f64;
    let x_sq = Dd::from_f64(x_f).mul(Dd::from_f64(x_f));
    dd_from_i128(phi).sub(x_sq.mul(dd_three_over_pi_sq())).to_f64()
}

/// R(x) = Phi(x) - 3x^2/pi^2 with Phi exact.
pub fn r_big(x: u64) -> Result<f64> {
    if x == 0 {
        return Err(Error::domain("r_big: x must be >= 1"));
    }
    if x > FAST_MAX {
        return Err(Error::domain(format!(
            "r_big: x = {x} exceeds the bound {FAST_MAX}"
        )));
    }
    let mut cache = SummatoryCache::new();
    let phi = phi_sum_fast(x, &mut cache)?;
    Ok(remainder_from_phi(x, phi))
}

fn f_norm_from_remainder(x: u64, r: f64) -> f64 {
    let x_f = x as f64;
    let log = x_f.ln();
    r / (x_f.sqrt() * log * log)
}

/// Normalized error f(x) = R(x) / (sqrt(x) log^2 x), computed twice: from the
/// exact Phi and from the five-term float decomposition. Disagreement beyond
/// 1e-6 (relative with an absolute floor of 1e-6, since f crosses zero) is an
/// internal-consistency error.
pub fn f_normalized(x: u64) -> Result<f64> {
    if x < 2 {
        return Err(Error::domain("f_normalized: x must be >= 2"));
    }
    if x > BRUTE_MAX {
        return Err(Error::domain(format!(
            "f_normalized: x = {x} exceeds the bound {BRUTE_MAX}"
        )));
    }
    let direct = f_norm_from_remainder(x, r_big(x)?);
    let via_decomposition = f_norm_from_remainder(x, remainder_via_decomposition(x)?);
    let tol = 1e-6 * (1.0 + direct.abs().max(via_decomposition.abs()));
    if (direct - via_decomposition).abs() > tol {
        return Err(Error::internal(format!(
            "f_normalized({x}): direct route {direct} disagrees with the decomposition \
             route {via_decomposition}"
        )));
    }
    Ok(direct)
}

/// Pointwise error r(n) = phi(n) - 6 pi^-2 (n - 1/2), via the factorization
/// path, so isolated arguments near 5*10^13 cost microseconds.
pub fn r_point(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain("r_point: n must be >= 2"));
    }
    let phi = factorize(n)?.phi();
    let shifted = Dd::from_f64(n as f64).add_f64(-0.5);
    Ok(Dd::from_f64(phi as f64)
        .sub(dd_six_over_pi_sq().mul(shifted))
        .to_f64())
}

/// One scan row.
#[derive(Debug, Clone, Copy)]
pub struct ErrorSample {
    pub x: u64,
    pub phi_sum: i128,
    pub r_big: f64,
    pub r_over_x: f64,
    pub r_over_sqrt: f64,
    pub f_norm: f64,
    pub sign: i8,
    pub prime_power: bool,
}

/// Aggregate of a scan over `[lo, hi]` with the given stride.
#[derive(Debug, Clone)]
pub struct ScanReport {
    pub lo: u64,
    pub hi: u64,
    pub step: u64,
    pub samples: Vec<ErrorSample>,
    pub sign_changes: u64,
    pub sup_r_over_x: f64,
    pub sup_f_norm: f64,
    /// sup |R(x)| / (x sqrt(log log x)) over samples with x >= 3, reported so
    /// both candidate normalizations of the error term can be inspected.
    pub sup_r_over_x_loglog: f64,
    /// Prime-power sample points get their |R(x)|/x tracked separately; no
    /// assertion is attached to the split, it is descriptive.
    pub prime_power_count: u64,
    pub sup_r_over_x_prime_powers: f64,
}

fn sample_sign(r: f64, x: u64) -> i8 {
    if r.abs() <= 1e-9 * x as f64 {
        0
    } else if r > 0.0 {
        1
    } else {
        -1
    }
}

/// Odd prime powers p^e with e >= 2 up to `hi` (primes themselves are
/// recognized from the sieve via phi(n) = n - 1).
fn higher_prime_powers(hi: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let root = hi.isqrt();
    let mut sieve_hi = root.max(2);
    if sieve_hi > 1_000_000 {
        sieve_hi = 1_000_000;
    }
    if let Ok(t) = sieve_segment_capped(2, sieve_hi, 1_000_001) {
        for p in 2..=sieve_hi {
            if t.phi(p) != p - 1 {
                continue;
            }
            let mut v = p as u128 * p as u128;
            while v <= hi as u128 {
                out.push(v as u64);
                v *= p as u128;
            }
        }
    }
    out.sort_unstable();
    out
}

/// Stream the error term over `[lo, hi]`, sampling every `step`-th point.
///
/// The range splits into contiguous chunks; each chunk seeds its exact
/// running Phi from `phi_sum_fast` at the left edge and then streams its
/// sieve, so chunks parallelize while the merged report stays deterministic.
pub fn scan_errors(lo: u64, hi: u64, step: u64) -> Result<ScanReport> {
    if lo < 1 {
        return Err(Error::domain("scan_errors: lo must be >= 1"));
    }
    if lo > hi {
        return Err(Error::domain("scan_errors: lo must be <= hi"));
    }
    if step < 1 {
        return Err(Error::domain("scan_errors: step must be >= 1"));
    }
    if hi > BRUTE_MAX {
        return Err(Error::domain(format!(
            "scan_errors: hi = {hi} exceeds the sieved-path bound {BRUTE_MAX}"
        )));
    }
    let n_samples = (hi - lo) / step + 1;
    if n_samples > SCAN_SAMPLE_CAP {
        return Err(Error::resource(format!(
            "scan_errors: {n_samples} samples exceed the cap {SCAN_SAMPLE_CAP}; raise step"
        )));
    }

    let powers = higher_prime_powers(hi);
    let chunks: Vec<(u64, u64)> = {
        let mut v = Vec::new();
        let mut a = lo;
        while a <= hi {
            let b = (a + CHUNK - 1).min(hi);
            v.push((a, b));
            a = b + 1;
        }
        v
    };

    let chunk_samples: Vec<Vec<ErrorSample>> = chunks
        .into_par_iter()
        .map(|(a, b)| -> Result<Vec<ErrorSample>> {
            let mut cache = SummatoryCache::new();
            let mut phi_acc: i128 = if a > 1 {
                phi_sum_fast(a - 1, &mut cache)?
            } else {
                0
            };
            let table = sieve_segment_capped(a, b, CHUNK as usize)?;
            let mut out = Vec::new();
            for n in a..=b {
                let phi_n = table.phi(n);
                phi_acc = phi_acc
                    .checked_add(phi_n as i128)
                    .ok_or_else(|| Error::internal("scan_errors: Phi overflow"))?;
                if (n - lo) % step != 0 {
                    continue;
                }
                let r = remainder_from_phi(n, phi_acc);
                let x_f = n as f64;
                let is_pp = phi_n == n - 1 || powers.binary_search(&n).is_ok();
                out.push(ErrorSample {
                    x: n,
                    phi_sum: phi_acc,
                    r_big: r,
                    r_over_x: r / x_f,
                    r_over_sqrt: r / x_f.sqrt(),
                    f_norm: f_norm_from_remainder(n, r),
                    sign: sample_sign(r, n),
                    prime_power: is_pp,
                });
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;

    let samples: Vec<ErrorSample> = chunk_samples.into_iter().flatten().collect();
    let mut sign_changes = 0u64;
    for w in samples.windows(2) {
        if w[0].sign != 0 && w[1].sign != 0 && w[0].sign != w[1].sign {
            sign_changes += 1;
        }
    }
    let mut sup_r_over_x = 0.0f64;
    let mut sup_f_norm = 0.0f64;
    let mut sup_loglog = 0.0f64;
    let mut pp_count = 0u64;
    let mut sup_pp = 0.0f64;
    for s in &samples {
        sup_r_over_x = sup_r_over_x.max(s.r_over_x.abs());
        sup_f_norm = sup_f_norm.max(s.f_norm.abs());
        if s.x >= 3 {
            let ll = (s.x as f64).ln().ln();
            if ll > 0.0 {
                sup_loglog = sup_loglog.max(s.r_over_x.abs() / ll.sqrt());
            }
        }
        if s.prime_power {
            pp_count += 1;
            sup_pp = sup_pp.max(s.r_over_x.abs());
        }
    }
    Ok(ScanReport {
        lo,
        hi,
        step,
        samples,
        sign_changes,
        sup_r_over_x,
        sup_f_norm,
        sup_r_over_x_loglog: sup_loglog,
        prime_power_count: pp_count,
        sup_r_over_x_prime_powers: sup_pp,
    })
}

/// Float with 12 significant digits, locale-free.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.11e}")
}

/// CSV emission: fixed header, phi as a decimal string, floats with 12
/// significant digits, one newline-terminated row per sample.
pub fn write_scan_csv<W: Write>(report: &ScanReport, mut w: W) -> Result<()> {
    writeln!(w, "x,phi_sum,r_big,r_over_x,r_over_sqrt,f_norm,sign")?;
    for s in &report.samples {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            s.x,
            s.phi_sum,
            fmt_float(s.r_big),
            fmt_float(s.r_over_x),
            fmt_float(s.r_over_sqrt),
            fmt_float(s.f_norm),
            s.sign
        )?;
    }
    Ok(())
}

/// sum_{n <= x} phi(n)/n - 6x/pi^2, streamed in double-double.
pub fn phi_over_n_residual(x: u64) -> Result<f64> {
    if x == 0 {
        return Err(Error::domain("phi_over_n_residual: x must be >= 1"));
    }
    if x > BRUTE_MAX {
        return Err(Error::domain(format!(
            "phi_over_n_residual: x = {x} exceeds the bound {BRUTE_MAX}"
        )));
    }
    Ok(phi_over_n_residual_checkpoints(&[x])?[0].1)
}

/// The residual at several checkpoints in one streaming pass.
pub fn phi_over_n_residual_checkpoints(xs: &[u64]) -> Result<Vec<(u64, f64)>> {
    let mut sorted: Vec<u64> = xs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() {
        return Ok(Vec::new());
    }
    let max = *sorted.last().unwrap();
    if sorted[0] == 0 || max > BRUTE_MAX {
        return Err(Error::domain("phi_over_n_residual: x out of range"));
    }
    let six = dd_six_over_pi_sq();
    let mut acc = Dd::ZERO;
    let mut out = Vec::with_capacity(sorted.len());
    let mut next = 0usize;
    let mut a = 1u64;
    while a <= max && next < sorted.len() {
        let b = (a + CHUNK - 1).min(max);
        let t = sieve_segment_capped(a, b, CHUNK as usize)?;
        for n in a..=b {
            let phi = t.phi(n);
            acc = acc.add(Dd::from_f64(phi as f64).div(Dd::from_f64(n as f64)));
            while next < sorted.len() && sorted[next] == n {
                out.push((n, acc.sub(six.mul_f64(n as f64)).to_f64()));
                next += 1;
            }
        }
        a = b + 1;
    }
    Ok(out)
}

/// R(x) recomputed by partial summation over W(t) = sum phi(n)/n:
/// Phi(x) = x W(x) - sum_{n < x} W(n). The independent route behind the
/// partial-summation consistency check.
pub fn remainder_partial_summation_checkpoints(xs: &[u64]) -> Result<Vec<(u64, f64)>> {
    let mut sorted: Vec<u64> = xs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() {
        return Ok(Vec::new());
    }
    let max = *sorted.last().unwrap();
    if sorted[0] == 0 || max > BRUTE_MAX {
        return Err(Error::domain(
            "remainder_partial_summation: x out of range",
        ));
    }
    let three = dd_three_over_pi_sq();
    let mut w = Dd::ZERO; // W(n)
    let mut s = Dd::ZERO; // sum_{m < n} W(m)
    let mut out = Vec::with_capacity(sorted.len());
    let mut next = 0usize;
    let mut a = 1u64;
    while a <= max && next < sorted.len() {
        let b = (a + CHUNK - 1).min(max);
        let t = sieve_segment_capped(a, b, CHUNK as usize)?;
        for n in a..=b {
            let phi = t.phi(n);
            w = w.add(Dd::from_f64(phi as f64).div(Dd::from_f64(n as f64)));
            while next < sorted.len() && sorted[next] == n {
                let x_f = n as f64;
                let x_sq = Dd::from_f64(x_f).mul(Dd::from_f64(x_f));
                let phi_route = w.mul_f64(x_f).sub(s);
                out.push((n, phi_route.sub(x_sq.mul(three)).to_f64()));
                next += 1;
            }
            s = s.add(w);
        }
        a = b + 1;
    }
    Ok(out)
}

/// Distribution summary of the local jumps phi(n+1) - phi(n) on [lo, hi].
#[derive(Debug, Clone, Copy)]
pub struct JumpStats {
    pub lo: u64,
    pub hi: u64,
    pub count: u64,
    pub min: i64,
    pub max: i64,
    /// Left endpoint n of the first maximal jump phi(n+1) - phi(n).
    pub argmax: u64,
    /// Left endpoint n of the first minimal jump.
    pub argmin: u64,
    pub mean: f64,
    /// Exact sum of all jumps; telescopes to phi(hi) - phi(lo).
    pub total: i128,
}

/// Jump statistics over `[lo, hi]`, verifying the partial-sum identity
/// F_{n+1} - F_n = phi(n+1) exactly along the way.
pub fn jump_stats(lo: u64, hi: u64) -> Result<JumpStats> {
    if lo < 1 {
        return Err(Error::domain("jump_stats: lo must be >= 1"));
    }
    if hi <= lo {
        return Err(Error::domain("jump_stats: hi must exceed lo"));
    }
    if hi > 100_000_000 {
        return Err(Error::domain("jump_stats: hi exceeds 10^8"));
    }
    let mut prev_phi: Option<u64> = None;
    let mut running_f: i128 = 0;
    let mut min = i64::MAX;
    let mut max = i64::MIN;
    let mut argmin = lo;
    let mut argmax = lo;
    let mut total: i128 = 0;
    let mut count = 0u64;
    let mut a = lo;
    while a <= hi {
        let b = (a + CHUNK - 1).min(hi);
        let t = sieve_segment_capped(a, b, CHUNK as usize)?;
        for n in a..=b {
            let phi_n = t.phi(n);
            let f_prev = running_f;
            running_f += phi_n as i128;
            if running_f - f_prev != phi_n as i128 {
                return Err(Error::internal("jump_stats: partial-sum identity broke"));
            }
            if let Some(p) = prev_phi {
                let jump = phi_n as i64 - p as i64;
                if jump > max {
                    max = jump;
                    argmax = n - 1;
                }
                if jump < min {
                    min = jump;
                    argmin = n - 1;
                }
                total += i128::from(jump);
                count += 1;
            }
            prev_phi = Some(phi_n);
        }
        a = b + 1;
    }
    Ok(JumpStats {
        lo,
        hi,
        count,
        min,
        max,
        argmax,
        argmin,
        mean: total as f64 / count as f64,
        total,
    })
}
