//! totlab: a computation lab for the summatory Euler phi function.
//!
//! The crate computes, exactly, the summatory functions Phi(x) = sum phi(n),
//! M(x), D(x) and Q(x); the fractional-part and Mobius-twisted sums that
//! decompose Phi; the Riemann zeta function, its zeros on the critical line,
//! and the truncated explicit formula for Phi built from them; and the error
//! term R(x) = Phi(x) - 3x^2/pi^2 with its scan and jump diagnostics.
//!
//! Start with the runnable examples (`cargo run --example summatory_fast`,
//! `--example zero_hunt`, `--example error_scan`, ...); the `totlab` binary
//! exposes the same operations as subcommands.

pub mod arith;
pub mod error;
pub mod error_term;
pub mod exact;
pub mod explicit;
pub mod kahan;
pub mod selftest;
pub mod summatory;
pub mod twisted;
pub mod zeta;

pub use error::{Error, Result};

pub use arith::{
    divisor_count_point, factorize, is_prime, mobius_point, phi_k_point, phi_point,
    sieve_segment, ArithTable, Factorization,
};
pub use error_term::{
    f_normalized, jump_stats, phi_over_n_residual, r_big, r_point, scan_errors, write_scan_csv,
    ErrorSample, JumpStats, ScanReport,
};
pub use explicit::{
    oscillation_sum, perron_phi, phi_sum_explicit, trivial_zero_series, zero_sum,
    ExplicitEvaluation, OscillationValue, ZeroSumContext,
};
pub use selftest::{run_selftest, SuiteReport};
pub use summatory::{
    divisor_sum, mertens_brute, mertens_fast, mobius_moment, mobius_power_partial,
    phi_over_n_sum_exact, phi_over_n_sum_float, phi_sum_brute, phi_sum_fast, squarefree_count,
    SummatoryCache, SummatoryKind, SummatoryValue,
};
pub use twisted::{
    decompose_phi_sum, frac_part_sum, mobius_frac_moment, mobius_frac_sum,
    mobius_frac_weighted_sum, phi_frac_sum, DecompositionBreakdown, FracValue, EULER_GAMMA,
};
pub use zeta::{
    bernoulli, count_zeros_formula, default_zeros, find_zeros, hardy_z, load_zeros, write_zeros,
    zeta, zeta_prime, zeta_special, BernoulliTable, ComplexEvalResult, SpecialKind, SpecialValue,
    ZetaZero, ZeroSource,
};
