//! Zeta special values: the Euler-Maclaurin engine against the exact
//! Bernoulli closed forms.
//!
//! Run with: cargo run --release --example zeta_values

use num_complex::Complex64;
use totlab::zeta::{zeta_even_pos, zeta_odd_neg, zeta_prime_even_neg};
use totlab::{bernoulli, zeta, zeta_prime};

fn main() -> totlab::Result<()> {
    println!("Bernoulli numbers: B_2 = {}, B_12 = {}", bernoulli(2)?, bernoulli(12)?);

    let pi = std::f64::consts::PI;
    println!("\nzeta at classical points (numeric vs closed form):");
    let z2 = zeta(Complex64::new(2.0, 0.0))?.value.re;
    println!("  zeta(2)  = {z2:.15}  vs pi^2/6  = {:.15}", pi * pi / 6.0);
    let zm1 = zeta(Complex64::new(-1.0, 0.0))?.value.re;
    println!("  zeta(-1) = {zm1:.15} vs -1/12   = {:.15}", -1.0 / 12.0);
    let z0 = zeta(Complex64::new(0.0, 0.0))?.value.re;
    println!("  zeta(0)  = {z0:.15} vs -1/2");

    println!("\nclosed-form families:");
    for n in 1..=4usize {
        let (coeff, val) = zeta_even_pos(n)?;
        println!("  zeta({:>2}) = {val:.12}   (rational coefficient {coeff} of (2pi)^{})", 2 * n, 2 * n);
    }
    for n in 0..=3usize {
        println!("  zeta({:>3}) = {}", -(2 * n as i64) - 1, zeta_odd_neg(n)?);
    }
    for n in 1..=3usize {
        let closed = zeta_prime_even_neg(n)?;
        let numeric = zeta_prime(Complex64::new(-2.0 * n as f64, 0.0))?.value.re;
        println!(
            "  zeta'({:>3}) = {closed:.12} (closed) vs {numeric:.12} (numeric)",
            -(2 * n as i64)
        );
    }

    let s = Complex64::new(0.5, 25.0);
    let r = zeta(s)?;
    println!("\non the critical line: zeta(1/2 + 25i) = {} (est err {:.1e})", r.value, r.est_error);
    Ok(())
}
