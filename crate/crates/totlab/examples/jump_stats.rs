//! Local jumps phi(n+1) - phi(n): the maxima land just before primes, the
//! minima right after them, and the jump sum telescopes exactly.
//!
//! Run with: cargo run --release --example jump_stats

use totlab::{factorize, is_prime, jump_stats};

fn main() -> totlab::Result<()> {
    for (lo, hi) in [(1u64, 10u64), (1, 1000), (1, 1_000_000)] {
        let j = jump_stats(lo, hi)?;
        println!("[{lo}, {hi}]:");
        println!("  jumps = {}, mean = {:.4}, telescoped total = {}", j.count, j.mean, j.total);
        println!(
            "  max = {:>8} at {} -> {} (prime? {})",
            j.max,
            j.argmax,
            j.argmax + 1,
            is_prime(j.argmax + 1)
        );
        let after = factorize(j.argmin + 1)?;
        println!(
            "  min = {:>8} at {} -> {} = {:?}",
            j.min,
            j.argmin,
            j.argmin + 1,
            after.factors
        );
    }
    Ok(())
}
