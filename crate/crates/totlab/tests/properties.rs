//! Property tests for the cross-route identities on randomly drawn
//! arguments; the exhaustive versions live in the acceptance suite.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use totlab::exact::FracSum;
use totlab::{
    decompose_phi_sum, divisor_sum, frac_part_sum, mertens_brute, mertens_fast, mobius_frac_sum,
    phi_sum_brute, phi_sum_fast, sieve_segment, FracValue, SummatoryCache,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fast_routes_match_brute(x in 1u64..20_000) {
        let mut cache = SummatoryCache::new();
        prop_assert_eq!(phi_sum_fast(x, &mut cache).unwrap(), phi_sum_brute(x).unwrap());
        prop_assert_eq!(mertens_fast(x, &mut cache).unwrap(), mertens_brute(x).unwrap());
    }

    #[test]
    fn twisted_sum_identity(x in 1u64..1_500) {
        // sum mu(n)((x/n)) = x sum mu(n)/n - 1, exactly.
        let table = sieve_segment(1, x).unwrap();
        let mut mu_over_n = FracSum::new();
        for n in 1..=x {
            let m = table.mu(n);
            if m != 0 {
                mu_over_n.add_term(i128::from(m), 1, u128::from(n));
            }
        }
        let lhs = mobius_frac_sum(x).unwrap();
        let rhs = mu_over_n.into_ratio() * BigRational::from_integer(BigInt::from(x))
            - BigRational::one();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn harmonic_identity(x in 1u64..1_500) {
        // sum ((x/n)) = x H_x - D(x), exactly.
        let mut h = FracSum::new();
        for n in 1..=x {
            h.add_term(1, 1, u128::from(n));
        }
        let rhs = h.into_ratio() * BigRational::from_integer(BigInt::from(x))
            - BigRational::from_integer(BigInt::from(divisor_sum(x).unwrap()));
        prop_assert_eq!(frac_part_sum(x).unwrap(), rhs);
    }

    #[test]
    fn decomposition_reconstructs_phi(x in 1u64..1_200) {
        let d = decompose_phi_sum(x).unwrap();
        let phi = BigRational::from_integer(BigInt::from(phi_sum_brute(x).unwrap()));
        prop_assert_eq!(&d.total, &phi);
        prop_assert_eq!(d.recombined(), phi);
    }

    #[test]
    fn frac_part_is_canonical(x in 0u64..100_000, d in 1u64..100_000) {
        let f = FracValue::frac_part(x, d);
        if x % d == 0 {
            prop_assert!(f.is_zero());
            prop_assert_eq!(f.denom(), 1);
        } else {
            prop_assert!(f.numer() < f.denom());
            let g = gcd(f.numer(), f.denom());
            prop_assert_eq!(g, 1);
            prop_assert!((f.to_f64() - (x % d) as f64 / d as f64).abs() < 1e-15);
        }
    }

    #[test]
    fn scan_row_counts(lo in 2u64..5_000, len in 0u64..400, step in 1u64..7) {
        let hi = lo + len;
        let report = totlab::scan_errors(lo, hi, step).unwrap();
        prop_assert_eq!(report.samples.len() as u64, (hi - lo) / step + 1);
        let mut csv = Vec::new();
        totlab::write_scan_csv(&report, &mut csv).unwrap();
        let text = String::from_utf8(csv).unwrap();
        prop_assert_eq!(text.lines().count(), report.samples.len() + 1);
        for line in text.lines().skip(1) {
            prop_assert_eq!(line.split(',').count(), 7);
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}
