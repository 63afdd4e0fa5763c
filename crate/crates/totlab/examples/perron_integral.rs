//! Perron's line integral for Phi(x): the quadrature converges slowly (rate
//! ~ x^sigma0 / T) toward the partial sum, and at integer x toward the
//! half-weight value Phi(x) - phi(x)/2.
//!
//! Run with: cargo run --release --example perron_integral

use totlab::{perron_phi, phi_sum_brute};

fn main() -> totlab::Result<()> {
    let exact = phi_sum_brute(10)? as f64;
    println!("target Phi(10) = {exact} at x = 10.5:");
    for t in [30.0, 60.0, 120.0] {
        let v = perron_phi(10.5, 2.5, t, 0.01)?;
        println!("  T = {t:>5}: integral = {v:>9.4}, error {:+.4}", v - exact);
    }

    // Integer argument: the last term carries weight 1/2.
    let half_weight = phi_sum_brute(2)? as f64 - 0.5 * 1.0; // phi(2) = 1
    let v = perron_phi(2.0, 2.5, 120.0, 0.01)?;
    println!("\nx = 2 (integer): integral = {v:.4}, half-weight target Phi(2) - phi(2)/2 = {half_weight}");
    Ok(())
}
