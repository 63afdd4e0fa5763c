//! Sieve a segment and read off phi, mu and d, then check multiplicativity
//! on a few coprime pairs.
//!
//! Run with: cargo run --release --example sieve_basics

use totlab::{factorize, sieve_segment};

fn main() -> totlab::Result<()> {
    let table = sieve_segment(1, 20)?;
    println!("  n  phi  mu   d");
    for n in 1..=20u64 {
        println!("{n:>3} {:>4} {:>3} {:>3}", table.phi(n), table.mu(n), table.d(n));
    }

    // The same values come out of the factorization path.
    let f = factorize(5040)?;
    println!("\n5040 = {:?}", f.factors);
    println!("phi(5040) = {}, mu = {}, d = {}", f.phi(), f.mu(), f.divisor_count());

    for (a, b) in [(9u64, 16u64), (25, 77), (128, 81)] {
        let (fa, fb, fab) = (factorize(a)?, factorize(b)?, factorize(a * b)?);
        println!(
            "phi({a})*phi({b}) = {} = phi({}) = {}",
            fa.phi() * fb.phi(),
            a * b,
            fab.phi()
        );
        assert_eq!(fa.phi() * fb.phi(), fab.phi());
    }
    Ok(())
}
