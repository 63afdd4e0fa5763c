//! Fractional-part sums and their Mobius twists, exactly. The plain sum has
//! mean (1 - gamma); twisting by mu collapses it by square-root cancellation.
//!
//! Run with: cargo run --release --example twisted_sums

use totlab::twisted::frac_part_sum_float;
use totlab::{frac_part_sum, mobius_frac_moment, mobius_frac_sum, phi_frac_sum, EULER_GAMMA};

fn main() -> totlab::Result<()> {
    println!("exact values at x = 10:");
    println!("  sum ((10/n))          = {}", frac_part_sum(10)?);
    println!("  sum mu(n)((10/n))     = {}", mobius_frac_sum(10)?);
    println!("  sum mu(n)((10/n))^2   = {}", mobius_frac_moment(10, 2)?);
    println!("  sum phi(n)((10/n))    = {}", phi_frac_sum(10)?);

    println!("\nmean fractional part (1/x) sum ((x/n)) vs 1 - gamma = {:.7}:", 1.0 - EULER_GAMMA);
    for x in [1_000u64, 100_000, 10_000_000] {
        let mean = frac_part_sum_float(x)? / x as f64;
        println!(
            "  x = {x:>9}: mean = {mean:.9}  (residual {:+.2e})",
            mean - (1.0 - EULER_GAMMA)
        );
    }

    println!("\nsquare-root cancellation of the twist, |sum mu(n)((x/n))| vs sqrt(x):");
    for x in [1_000u64, 10_000, 100_000] {
        let v = totlab::twisted::mobius_frac_sum_float(x)?;
        println!("  x = {x:>7}: sum = {v:>10.4}, |sum|/sqrt(x) = {:.4}", v.abs() / (x as f64).sqrt());
    }
    Ok(())
}
