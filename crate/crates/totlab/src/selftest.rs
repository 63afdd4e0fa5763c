//! Desk-scale invariant suites behind the `selftest` subcommand: every module
//! re-verifies its core identities in seconds, one PASS/FAIL line per suite.

use crate::arith::{factorize, is_prime, sieve_segment};
use crate::error_term::{remainder_partial_summation_checkpoints, r_big, r_point, scan_errors};
use crate::explicit::{phi_sum_explicit, trivial_term_coefficient, ZeroSumContext};
use crate::summatory::{
    divisor_sum, mertens_brute, mertens_fast, phi_sum_brute, phi_sum_fast, squarefree_count,
    SummatoryCache,
};
use crate::twisted::decompose_phi_sum;
use crate::zeta::{
    count_zeros_formula, find_zeros, zeta, zeta_prime, zeta_real, ZetaZero,
};
use num_complex::Complex64;
use num_rational::BigRational;
use std::time::Instant;

/// Outcome of one invariant suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn pointwise_suite(limit: u64) -> Check {
    let t = sieve_segment(1, limit).map_err(|e| e.to_string())?;
    for n in 1..=limit {
        let f = factorize(n).map_err(|e| e.to_string())?;
        ensure(t.phi(n) == f.phi(), format!("phi({n}) sieve vs factorization"))?;
        ensure(t.mu(n) == f.mu(), format!("mu({n}) sieve vs factorization"))?;
        ensure(
            u64::from(t.d(n)) == f.divisor_count(),
            format!("d({n}) sieve vs factorization"),
        )?;
    }
    Ok(format!("sieve = factorization for n <= {limit}"))
}

fn identity_suite(limit: u64) -> Check {
    let t = sieve_segment(1, limit).map_err(|e| e.to_string())?;
    for x in 1..=limit {
        let mut sylvester: i128 = 0;
        let mut mobius: i128 = 0;
        for n in 1..=x {
            let q = (x / n) as i128;
            sylvester += i128::from(t.phi(n)) * q;
            mobius += i128::from(t.mu(n)) * q;
        }
        let tri = (x as i128) * (x as i128 + 1) / 2;
        ensure(sylvester == tri, format!("Sylvester identity at x = {x}"))?;
        ensure(mobius == 1, format!("Mobius identity at x = {x}"))?;
    }
    Ok(format!("Sylvester and Mobius identities exact for x <= {limit}"))
}

fn summatory_suite(limit: u64) -> Check {
    let mut cache = SummatoryCache::new();
    for x in 1..=limit {
        let fast = phi_sum_fast(x, &mut cache).map_err(|e| e.to_string())?;
        let brute = phi_sum_brute(x).map_err(|e| e.to_string())?;
        ensure(fast == brute, format!("Phi fast vs brute at {x}"))?;
        let mf = mertens_fast(x, &mut cache).map_err(|e| e.to_string())?;
        let mb = mertens_brute(x).map_err(|e| e.to_string())?;
        ensure(mf == mb, format!("Mertens fast vs brute at {x}"))?;
    }
    ensure(
        divisor_sum(10).map_err(|e| e.to_string())? == 27,
        "D(10) = 27",
    )?;
    ensure(
        squarefree_count(10).map_err(|e| e.to_string())? == 7,
        "Q(10) = 7",
    )?;
    Ok(format!("fast = brute for x <= {limit}; D, Q reference values"))
}

fn decomposition_suite(limit: u64) -> Check {
    for x in 1..=limit {
        let d = decompose_phi_sum(x).map_err(|e| e.to_string())?;
        let phi = BigRational::from_integer(
            phi_sum_brute(x).map_err(|e| e.to_string())?.into(),
        );
        ensure(d.total == phi, format!("decomposition total at x = {x}"))?;
        ensure(
            d.recombined() == phi,
            format!("five terms recombine at x = {x}"),
        )?;
    }
    Ok(format!("five-term decomposition equals Phi for x <= {limit}"))
}

fn zeta_suite() -> Check {
    let pi = std::f64::consts::PI;
    let z2 = zeta_real(2.0).map_err(|e| e.to_string())?;
    ensure(
        (z2 - pi * pi / 6.0).abs() <= 1e-12 * z2,
        "zeta(2) = pi^2/6",
    )?;
    let zm1 = zeta_real(-1.0).map_err(|e| e.to_string())?;
    ensure((zm1 + 1.0 / 12.0).abs() <= 1e-12, "zeta(-1) = -1/12")?;
    let z0 = zeta_real(0.0).map_err(|e| e.to_string())?;
    ensure((z0 + 0.5).abs() <= 1e-12, "zeta(0) = -1/2")?;
    let z3 = zeta_real(3.0).map_err(|e| e.to_string())?;
    let zp = zeta_prime(Complex64::new(-2.0, 0.0))
        .map_err(|e| e.to_string())?
        .value
        .re;
    ensure(
        (zp + z3 / (4.0 * pi * pi)).abs() <= 1e-10,
        "zeta'(-2) = -zeta(3)/(4 pi^2)",
    )?;
    for i in 0..5 {
        let s = Complex64::new(0.5, 20.0 * i as f64 + 1.0);
        let z = zeta(s).map_err(|e| e.to_string())?.value;
        let zc = zeta(s.conj()).map_err(|e| e.to_string())?.value;
        ensure(
            (z.conj() - zc).norm() <= 1e-12 * (1.0 + z.norm()),
            format!("conjugate symmetry at {s}"),
        )?;
    }
    Ok("special values, derivative, conjugate symmetry".to_string())
}

fn zeros_suite(t_max: f64) -> Check {
    let zs = find_zeros(t_max).map_err(|e| e.to_string())?;
    ensure(!zs.is_empty(), "no zeros found")?;
    ensure(
        (zs[0].t - 14.134725).abs() < 1e-5,
        format!("first ordinate {}", zs[0].t),
    )?;
    let formula = count_zeros_formula(t_max).map_err(|e| e.to_string())?;
    ensure(
        (zs.len() as f64 - formula).abs() <= 2.0,
        format!("count {} vs formula {formula:.3}", zs.len()),
    )?;
    Ok(format!("{} zeros below {t_max}, count matches formula", zs.len()))
}

fn explicit_suite(zeros: &[ZetaZero]) -> Check {
    let e = phi_sum_explicit(10.5, &[], 0).map_err(|e| e.to_string())?;
    let pi = std::f64::consts::PI;
    ensure(
        e.total == 3.0 * 10.5 * 10.5 / (pi * pi) + 1.0 / 6.0,
        "empty truncation degeneracy",
    )?;
    for n in 1..=10usize {
        let closed = trivial_term_coefficient(n).map_err(|e| e.to_string())?;
        let z_odd = zeta_real(-(2.0 * n as f64) - 1.0).map_err(|e| e.to_string())?;
        let zp = zeta_prime(Complex64::new(-2.0 * n as f64, 0.0))
            .map_err(|e| e.to_string())?
            .value
            .re;
        let numeric = z_odd / (2.0 * n as f64 * zp);
        ensure(
            (closed - numeric).abs() <= 1e-10 * closed.abs(),
            format!("trivial-series term {n}"),
        )?;
    }
    if !zeros.is_empty() {
        let ctx = ZeroSumContext::new(zeros).map_err(|e| e.to_string())?;
        let paired = ctx.zero_sum_paired(100.5);
        ensure(
            paired.im.abs() <= 1e-8 * paired.re.abs() + 1e-12,
            "conjugate pairing reality",
        )?;
        let ev = phi_sum_explicit(1000.5, zeros, 20).map_err(|e| e.to_string())?;
        let exact = phi_sum_brute(1000).map_err(|e| e.to_string())? as f64;
        ensure(
            (ev.total - exact).abs() <= 1000.5,
            format!("explicit residual {}", ev.total - exact),
        )?;
    }
    Ok(format!(
        "trivial series cross-check, zero-sum pairing ({} zeros)",
        zeros.len()
    ))
}

fn error_term_suite(quick: bool) -> Check {
    // f(x) holds one sign on [3000, 3100]; the first crossings sit past 3100.
    let hi = if quick { 3200 } else { 3500 };
    let report = scan_errors(3000, hi, 1).map_err(|e| e.to_string())?;
    ensure(
        report.sign_changes >= 1,
        format!("no sign changes on [3000, {hi}]"),
    )?;
    ensure(report.sup_f_norm.is_finite(), "sup f not finite")?;
    let xs = [100u64, 5000, 65_536];
    let alt = remainder_partial_summation_checkpoints(&xs).map_err(|e| e.to_string())?;
    for (x, r_alt) in alt {
        let direct = r_big(x).map_err(|e| e.to_string())?;
        ensure(
            (direct - r_alt).abs() <= 1e-6 * (1.0 + direct.abs().max(r_alt.abs())),
            format!("partial-summation route at {x}"),
        )?;
    }
    let big = r_point(50_000_000_000_021).map_err(|e| e.to_string())?;
    ensure(big.is_finite(), "r(n) at 5e13 not finite")?;
    ensure(is_prime(2) && !is_prime(1), "primality sanity")?;
    Ok(format!(
        "scan [3000, {hi}]: {} sign changes; dual summation routes agree",
        report.sign_changes
    ))
}

/// Run every suite; `quick` trims ranges to finish well under a minute.
/// `zeros` feeds the explicit-formula suite (defaults to the embedded table).
pub fn run_selftest(quick: bool, zeros: Option<Vec<ZetaZero>>) -> Vec<SuiteReport> {
    let zeros = zeros.unwrap_or_else(crate::zeta::default_zeros);
    let pointwise_limit = if quick { 2_000 } else { 10_000 };
    let identity_limit = if quick { 800 } else { 3_000 };
    let summatory_limit = if quick { 800 } else { 3_000 };
    let decompose_limit = if quick { 200 } else { 800 };
    let zeros_t_max = if quick { 30.0 } else { 60.0 };

    let suites: Vec<(&'static str, Box<dyn FnOnce() -> Check>)> = vec![
        (
            "arith_pointwise",
            Box::new(move || pointwise_suite(pointwise_limit)),
        ),
        (
            "summatory_identities",
            Box::new(move || identity_suite(identity_limit)),
        ),
        (
            "summatory_fast_vs_brute",
            Box::new(move || summatory_suite(summatory_limit)),
        ),
        (
            "twisted_decomposition",
            Box::new(move || decomposition_suite(decompose_limit)),
        ),
        ("zeta_engine", Box::new(zeta_suite)),
        ("zero_location", Box::new(move || zeros_suite(zeros_t_max))),
        (
            "explicit_formula",
            Box::new(move || explicit_suite(&zeros)),
        ),
        ("error_term", Box::new(move || error_term_suite(quick))),
    ];

    suites
        .into_iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let outcome = f();
            let seconds = start.elapsed().as_secs_f64();
            match outcome {
                Ok(detail) => SuiteReport {
                    name,
                    passed: true,
                    detail,
                    seconds,
                },
                Err(detail) => SuiteReport {
                    name,
                    passed: false,
                    detail,
                    seconds,
                },
            }
        })
        .collect()
}
