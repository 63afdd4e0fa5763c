//! The sublinear routes for Phi(x) and M(x) against their brute oracles,
//! then a timing ladder up to 10^10 where only the fast route can go.
//!
//! Run with: cargo run --release --example summatory_fast

use std::time::Instant;
use totlab::{mertens_brute, mertens_fast, phi_sum_brute, phi_sum_fast, SummatoryCache};

fn main() -> totlab::Result<()> {
    let mut cache = SummatoryCache::new();

    for x in [10u64, 100, 10_000, 1_000_000] {
        let fast = phi_sum_fast(x, &mut cache)?;
        let brute = phi_sum_brute(x)?;
        assert_eq!(fast, brute);
        println!("Phi({x:>8}) = {fast:>15}   M({x}) = {}", mertens_brute(x)?);
    }

    println!();
    for x in [100_000_000u64, 1_000_000_000, 10_000_000_000] {
        let t0 = Instant::now();
        let phi = phi_sum_fast(x, &mut cache)?;
        let t_phi = t0.elapsed();
        let t0 = Instant::now();
        let m = mertens_fast(x, &mut cache)?;
        let t_m = t0.elapsed();
        println!(
            "x = {x:>12}: Phi = {phi} ({t_phi:.2?}), M = {m} ({t_m:.2?}), \
             cache {} entries",
            cache.len()
        );
    }
    println!(
        "cache hits/misses: {}/{}",
        cache.hits(),
        cache.misses()
    );
    Ok(())
}
