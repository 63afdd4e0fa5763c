//! Scan the error term R(x) = Phi(x) - 3x^2/pi^2 over [3000, 3500], count
//! sign changes of the normalized f(x), and write the CSV report.
//!
//! Run with: cargo run --release --example error_scan

use totlab::{scan_errors, write_scan_csv};

fn main() -> totlab::Result<()> {
    let report = scan_errors(3000, 3500, 1)?;
    println!(
        "[{}, {}]: {} samples, {} sign changes of f(x)",
        report.lo,
        report.hi,
        report.samples.len(),
        report.sign_changes
    );
    println!("sup |R|/x            = {:.6}", report.sup_r_over_x);
    println!("sup |f|              = {:.6}", report.sup_f_norm);
    println!("sup |R|/(x sqrt(llx))= {:.6}", report.sup_r_over_x_loglog);
    println!(
        "prime-power samples  = {}, their sup |R|/x = {:.6}",
        report.prime_power_count, report.sup_r_over_x_prime_powers
    );

    // Where f crosses zero:
    let mut crossings = Vec::new();
    for w in report.samples.windows(2) {
        if w[0].sign != 0 && w[1].sign != 0 && w[0].sign != w[1].sign {
            crossings.push((w[0].x, w[1].x));
        }
    }
    println!("crossings at {crossings:?}");

    let path = std::env::temp_dir().join("totlab_scan_3000_3500.csv");
    let mut buf = Vec::new();
    write_scan_csv(&report, &mut buf)?;
    std::fs::write(&path, &buf)?;
    println!("CSV written to {}", path.display());
    Ok(())
}
