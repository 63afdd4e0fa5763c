//! Assemble Phi(x) from the explicit formula: main term + 1/6 + zero sum -
//! trivial-zero series, and watch the residual against the exact value as
//! more zeros enter.
//!
//! Run with: cargo run --release --example explicit_formula

use totlab::explicit::phi_sum_explicit_with;
use totlab::{default_zeros, phi_sum_brute, ZeroSumContext};

fn main() -> totlab::Result<()> {
    let zeros = default_zeros();
    let x = 1000.5f64;
    let exact = phi_sum_brute(1000)? as f64;
    println!("x = {x}, exact Phi(1000) = {exact}\n");
    println!("zeros   truncated total      residual");
    for k in [0usize, 1, 3, 8, 15, 29] {
        let ctx = ZeroSumContext::new(&zeros[..k])?;
        let e = phi_sum_explicit_with(x, &ctx, 20)?;
        println!("{k:>5}   {:>16.6}   {:>+10.4}", e.total, e.total - exact);
    }

    let ctx = ZeroSumContext::new(&zeros)?;
    let e = phi_sum_explicit_with(x, &ctx, 20)?;
    println!("\nfull breakdown at x = {x} with 29 zeros, 20 trivial terms:");
    println!("  main term      = {:.6}", e.main_term);
    println!("  constant       = {:.6}", e.constant_term);
    println!("  zero sum       = {:+.6}", e.zero_sum);
    println!("  trivial series = {:+.3e} (subtracted)", e.trivial_series);
    println!("  total          = {:.6}", e.total);

    let osc = totlab::oscillation_sum(1000.5, &zeros)?;
    println!(
        "\noscillating sum over the same zeros: {:+.6} (|Im| = {:.1e}), vs sqrt(x): {:+.4}",
        osc.value.re,
        osc.value.im.abs(),
        osc.value.re / 1000.5f64.sqrt()
    );
    Ok(())
}
