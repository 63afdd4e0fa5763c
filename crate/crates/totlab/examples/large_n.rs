//! The pointwise error r(n) = phi(n) - 6 pi^-2 (n - 1/2) over the short
//! interval [5*10^13, 5*10^13 + 200]: two hundred factorizations in well
//! under a second, normalized residuals r(n)/sqrt(n) on display.
//!
//! Run with: cargo run --release --example large_n

use std::time::Instant;
use totlab::{factorize, r_point};

fn main() -> totlab::Result<()> {
    let base = 50_000_000_000_000u64;
    let start = Instant::now();
    let values: Vec<(u64, f64)> = (0..=200u64)
        .map(|k| r_point(base + k).map(|v| (base + k, v)))
        .collect::<totlab::Result<_>>()?;
    let elapsed = start.elapsed();

    let sqrt_n = (base as f64).sqrt();
    let (mut sup, mut sup_n) = (0.0f64, base);
    for &(n, v) in &values {
        if v.abs() > sup {
            sup = v.abs();
            sup_n = n;
        }
    }
    println!("201 points in {elapsed:.2?}");
    println!("max |r(n)| = {sup:.3} at n = {sup_n} (|r|/sqrt(n) = {:.4})", sup / sqrt_n);

    println!("\nfirst ten rows:");
    for &(n, v) in values.iter().take(10) {
        let f = factorize(n)?;
        let largest = f.factors.last().map(|&(p, _)| p).unwrap_or(1);
        println!("  n = {n}: r = {v:>14.3}   largest prime factor {largest}");
    }
    Ok(())
}
