//! Locate critical-line zeros via sign changes of the Hardy Z function and
//! compare the running count with the smooth counting-formula main term.
//!
//! Run with: cargo run --release --example zero_hunt

use totlab::{count_zeros_formula, find_zeros, hardy_z};

fn main() -> totlab::Result<()> {
    let zeros = find_zeros(100.0)?;
    println!("{} zeros with 0 < t <= 100\n", zeros.len());
    println!(" #      ordinate          |Z(t)|      N(t) formula");
    for z in &zeros {
        let residual = hardy_z(z.t)?.abs();
        let formula = count_zeros_formula(z.t)?;
        println!("{:>2}  {:>15.9}   {residual:.2e}   {formula:>8.3}", z.index, z.t);
    }

    println!("\ncount vs formula:");
    for t in [30.0, 50.0, 100.0] {
        let count = zeros.iter().filter(|z| z.t <= t).count();
        println!(
            "  T = {t:>5}: located {count}, formula {:.3}",
            count_zeros_formula(t)?
        );
    }
    Ok(())
}
