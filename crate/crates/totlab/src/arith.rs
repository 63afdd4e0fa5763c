//! Pointwise arithmetic functions: Euler phi, Mobius mu and the divisor
//! count, sieved over segments for bulk work and recovered from a
//! factorization for isolated large arguments.

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::One;
use std::sync::OnceLock;

/// Hard ceiling for sieve arguments; base primes only go up to 10^6.
pub const SIEVE_MAX: u64 = 1_000_000_000_000;

/// Hard ceiling for factorization arguments.
pub const FACTORIZE_MAX: u64 = 1_000_000_000_000_000_000;

/// Default per-segment entry cap for [`sieve_segment`].
pub const DEFAULT_SEGMENT_CAP: usize = 100_000_000;

const TRIAL_PRIME_LIMIT: u32 = 1_000_000;

fn base_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_PRIME_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::with_capacity(80_000);
        for i in 2..=n {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

/// Pointwise values of phi, mu and d on a contiguous segment `[lo, hi]`.
#[derive(Debug, Clone)]
pub struct ArithTable {
    pub lo: u64,
    pub hi: u64,
    pub phi: Vec<u64>,
    pub mu: Vec<i8>,
    pub dcount: Vec<u32>,
}

impl ArithTable {
    #[inline]
    fn index(&self, n: u64) -> usize {
        debug_assert!(n >= self.lo && n <= self.hi);
        (n - self.lo) as usize
    }

    #[inline]
    pub fn phi(&self, n: u64) -> u64 {
        self.phi[self.index(n)]
    }

    #[inline]
    pub fn mu(&self, n: u64) -> i8 {
        self.mu[self.index(n)]
    }

    #[inline]
    pub fn d(&self, n: u64) -> u32 {
        self.dcount[self.index(n)]
    }

    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi.is_empty()
    }
}

/// Sieve phi, mu and d for every n in `[lo, hi]` in one pass.
///
/// Each entry keeps its unfactored remainder while base primes up to
/// `sqrt(hi)` are stripped; whatever remains above 1 is a single prime
/// factor larger than the root.
pub fn sieve_segment(lo: u64, hi: u64) -> Result<ArithTable> {
    sieve_segment_capped(lo, hi, DEFAULT_SEGMENT_CAP)
}

pub fn sieve_segment_capped(lo: u64, hi: u64, cap: usize) -> Result<ArithTable> {
    if lo < 1 {
        return Err(Error::domain("sieve_segment: lo must be >= 1"));
    }
    if hi < lo {
        return Err(Error::domain("sieve_segment: hi must be >= lo"));
    }
    if hi > SIEVE_MAX {
        return Err(Error::domain(format!(
            "sieve_segment: hi = {hi} exceeds the sieve bound {SIEVE_MAX}"
        )));
    }
    let len = (hi - lo + 1) as usize;
    if len > cap {
        return Err(Error::resource(format!(
            "sieve_segment: segment of {len} entries exceeds the cap of {cap}"
        )));
    }

    let mut rem: Vec<u64> = (lo..=hi).collect();
    let mut phi: Vec<u64> = vec![1; len];
    let mut mu: Vec<i8> = vec![1; len];
    let mut dcount: Vec<u32> = vec![1; len];

    let root = hi.isqrt();
    for &p in base_primes() {
        let p = u64::from(p);
        if p > root {
            break;
        }
        let start = lo.div_ceil(p) * p;
        let mut m = start;
        while m <= hi {
            let i = (m - lo) as usize;
            let mut e = 0u32;
            let mut pe = 1u64;
            while rem[i] % p == 0 {
                rem[i] /= p;
                e += 1;
                if e > 1 {
                    pe *= p;
                }
            }
            phi[i] *= pe * (p - 1);
            mu[i] = if e >= 2 { 0 } else { -mu[i] };
            dcount[i] *= e + 1;
            m += p;
        }
    }
    for i in 0..len {
        if rem[i] > 1 {
            phi[i] *= rem[i] - 1;
            mu[i] = -mu[i];
            dcount[i] *= 2;
        }
    }

    Ok(ArithTable {
        lo,
        hi,
        phi,
        mu,
        dcount,
    })
}

/// Prime factorization `n = prod p_i^{e_i}` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn phi(&self) -> u64 {
        let mut v = 1u64;
        for &(p, e) in &self.factors {
            v *= p.pow(e - 1) * (p - 1);
        }
        v
    }

    pub fn mu(&self) -> i8 {
        if self.factors.iter().any(|&(_, e)| e >= 2) {
            0
        } else if self.factors.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the 12-witness set covers 2^64).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-cycle Pollard rho; returns a nontrivial factor of composite odd `n`.
fn brent_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut xs = 0u64;
        let m = 128u64;
        let mut r = 1u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                xs = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            // Batch overshot; replay one step at a time.
            g = 1;
            let mut ys = xs;
            while g == 1 {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

fn split_prime_factors(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = brent_rho(n);
    split_prime_factors(d, out);
    split_prime_factors(n / d, out);
}

/// Full factorization for `1 <= n <= 10^18`: trial division by primes up to
/// 10^6, then Miller-Rabin plus Brent rho on the remainder.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::domain("factorize: n must be positive"));
    }
    if n > FACTORIZE_MAX {
        return Err(Error::domain(format!(
            "factorize: n = {n} exceeds the bound {FACTORIZE_MAX}"
        )));
    }
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut rem = n;
    for &p in base_primes() {
        let p = u64::from(p);
        if p * p > rem {
            break;
        }
        if rem % p == 0 {
            let mut e = 0u32;
            while rem % p == 0 {
                rem /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if rem > 1 {
        let mut large = Vec::new();
        split_prime_factors(rem, &mut large);
        large.sort_unstable();
        let mut i = 0;
        while i < large.len() {
            let p = large[i];
            let mut e = 0u32;
            while i < large.len() && large[i] == p {
                e += 1;
                i += 1;
            }
            factors.push((p, e));
        }
    }
    factors.sort_unstable_by_key(|&(p, _)| p);
    debug_assert_eq!(
        factors
            .iter()
            .fold(1u128, |acc, &(p, e)| acc * (p as u128).pow(e)),
        n as u128
    );
    Ok(Factorization { n, factors })
}

/// phi(n) for an isolated argument, through the factorization path.
pub fn phi_point(n: u64) -> Result<u64> {
    Ok(factorize(n)?.phi())
}

/// mu(n) for an isolated argument.
pub fn mobius_point(n: u64) -> Result<i8> {
    Ok(factorize(n)?.mu())
}

/// d(n) for an isolated argument.
pub fn divisor_count_point(n: u64) -> Result<u64> {
    Ok(factorize(n)?.divisor_count())
}

/// Extended totient `phi_k(n) = n^k * prod_{p | n} (1 - p^{-k})`, computed
/// exactly as `prod p^{k(e-1)} (p^k - 1)` over the distinct primes of n.
pub fn phi_k_point(n: u64, k: u32) -> Result<BigUint> {
    if k < 1 {
        return Err(Error::domain("phi_k_point: k must be >= 1"));
    }
    let f = factorize(n)?;
    let mut v = BigUint::one();
    for &(p, e) in &f.factors {
        let pk = BigUint::from(p).pow(k);
        v *= pk.clone() - BigUint::one();
        if e > 1 {
            v *= BigUint::from(p).pow(k * (e - 1));
        }
    }
    Ok(v)
}
