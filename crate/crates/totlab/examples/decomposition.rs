//! The five exact rational terms that reassemble Phi(x):
//!
//!   Phi(x) = x^2/2 sum mu(d)/d^2 + x/2 sum mu(d)/d - x sum mu(d)((x/d))/d
//!          - 1/2 sum mu(d)((x/d)) + 1/2 sum mu(d)((x/d))^2
//!
//! The main term carries ~x^2 * 3/pi^2; everything else is the error term.
//!
//! Run with: cargo run --release --example decomposition

use totlab::{decompose_phi_sum, phi_sum_brute};

fn main() -> totlab::Result<()> {
    for x in [1u64, 10, 100, 1000] {
        let d = decompose_phi_sum(x)?;
        println!("x = {x}");
        println!("  main      {:>24}  ~ {:.6}", d.term_main.to_string(), ratio_f64(&d.term_main));
        println!("  half      {:>24}  ~ {:.6}", d.term_half.to_string(), ratio_f64(&d.term_half));
        println!("  weighted  {:>24}  ~ {:.6}", d.term_weighted.to_string(), ratio_f64(&d.term_weighted));
        println!("  frac      {:>24}  ~ {:.6}", d.term_frac.to_string(), ratio_f64(&d.term_frac));
        println!("  square    {:>24}  ~ {:.6}", d.term_sq.to_string(), ratio_f64(&d.term_sq));
        println!("  total     {:>24}", d.total.to_string());
        let brute = phi_sum_brute(x)?;
        assert_eq!(d.total, num_rational::BigRational::from_integer(brute.into()));
        assert_eq!(d.recombined(), d.total);
        println!("  = Phi({x}) = {brute}\n");
    }
    Ok(())
}

fn ratio_f64(r: &num_rational::BigRational) -> f64 {
    totlab::exact::big_ratio_to_f64(r.numer(), r.denom())
}
