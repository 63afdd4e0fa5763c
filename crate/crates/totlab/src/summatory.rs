//! Exact summatory functions: Phi(x) = sum phi(n), the Mertens function
//! M(x), the divisor summatory D(x) and the squarefree count Q(x).
//!
//! Each function comes in two routes. The brute route streams a segmented
//! sieve and adds pointwise values; it is the oracle. The fast route uses the
//! divisor-grouping recursions
//!
//!   Phi(x) = x(x+1)/2 - sum_{d>=2} Phi(floor(x/d)),
//!   M(x)   = 1        - sum_{d>=2} M(floor(x/d)),
//!
//! memoized over the set of floor quotients, with a sieved prefix table below
//! roughly x^(2/3). All accumulators are checked i128; overflow is reported,
//! never wrapped.

use crate::arith::sieve_segment_capped;
use crate::error::{Error, Result};
use crate::exact::FracSum;
use crate::kahan::KahanSum;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::io::{BufRead, Write};

/// Upper bound for the brute (fully sieved) routes.
pub const BRUTE_MAX: u64 = 1_000_000_000;
/// Upper bound for the sublinear routes.
pub const FAST_MAX: u64 = 1_000_000_000_000;
/// Upper bound for the exact-rational mode of `phi_over_n_sum`.
pub const PHI_OVER_N_EXACT_MAX: u64 = 10_000_000;

const CHUNK: u64 = 1 << 21;
const PREFIX_CAP: usize = 1 << 26;

fn triangular(x: u64) -> i128 {
    let x = x as i128;
    x * (x + 1) / 2
}

/// Which summatory function a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SummatoryKind {
    #[serde(rename = "PHI_SUM")]
    PhiSum,
    #[serde(rename = "MERTENS")]
    Mertens,
    #[serde(rename = "DIVISOR_SUM")]
    DivisorSum,
    #[serde(rename = "SQUAREFREE_COUNT")]
    SquarefreeCount,
}

impl SummatoryKind {
    pub fn name(self) -> &'static str {
        match self {
            SummatoryKind::PhiSum => "PHI_SUM",
            SummatoryKind::Mertens => "MERTENS",
            SummatoryKind::DivisorSum => "DIVISOR_SUM",
            SummatoryKind::SquarefreeCount => "SQUAREFREE_COUNT",
        }
    }
}

/// One exact summatory value together with its argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SummatoryValue {
    pub x: u64,
    pub kind: SummatoryKind,
    pub value: i128,
}

impl SummatoryValue {
    /// Range invariants per kind; violated values are rejected at the
    /// checkpoint boundary.
    pub fn validate(&self) -> Result<()> {
        let ok = match self.kind {
            SummatoryKind::PhiSum | SummatoryKind::DivisorSum => self.value >= 1,
            SummatoryKind::SquarefreeCount => self.value >= 1 && self.value <= self.x as i128,
            SummatoryKind::Mertens => self.value.unsigned_abs() <= self.x as u128,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::validation(format!(
                "{} value {} out of range for x = {}",
                self.kind.name(),
                self.value,
                self.x
            )))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CheckpointRecord {
    kind: String,
    x: String,
    value: String,
}

/// Memo store for the sublinear recursions: sieved prefix tables plus a map
/// over the large floor-quotient arguments, with hit/miss counters.
#[derive(Debug, Default)]
pub struct SummatoryCache {
    phi_prefix: Vec<u64>,
    mertens_prefix: Vec<i32>,
    large: HashMap<(SummatoryKind, u64), i128>,
    hits: u64,
    misses: u64,
}

impl SummatoryCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn misses(&self) -> u64 {
        self.misses
    }

    pub fn len(&self) -> usize {
        self.large.len()
    }

    pub fn is_empty(&self) -> bool {
        self.large.is_empty()
    }

    pub fn get(&mut self, kind: SummatoryKind, x: u64) -> Option<i128> {
        match self.large.get(&(kind, x)) {
            Some(&v) => {
                self.hits += 1;
                Some(v)
            }
            None => {
                self.misses += 1;
                None
            }
        }
    }

    pub fn insert(&mut self, kind: SummatoryKind, x: u64, value: i128) {
        self.large.insert((kind, x), value);
    }

    /// Write every memoized value as one JSON object per line. Decimal
    /// strings keep 128-bit values safe from 64-bit JSON readers.
    pub fn write_checkpoints<W: Write>(&self, mut w: W) -> Result<usize> {
        let mut entries: Vec<_> = self.large.iter().collect();
        entries.sort_by_key(|&(&(kind, x), _)| (kind.name(), x));
        for (&(kind, x), &value) in &entries {
            let rec = CheckpointRecord {
                kind: kind.name().to_string(),
                x: x.to_string(),
                value: value.to_string(),
            };
            let line = serde_json::to_string(&rec)
                .map_err(|e| Error::format(format!("checkpoint encode: {e}")))?;
            writeln!(w, "{line}")?;
        }
        Ok(entries.len())
    }

    pub fn read_checkpoints<R: BufRead>(&mut self, r: R) -> Result<usize> {
        let mut n = 0;
        for (lineno, line) in r.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let rec: CheckpointRecord = serde_json::from_str(&line).map_err(|e| {
                Error::format(format!("checkpoint line {}: {e}", lineno + 1))
            })?;
            let kind = match rec.kind.as_str() {
                "PHI_SUM" => SummatoryKind::PhiSum,
                "MERTENS" => SummatoryKind::Mertens,
                "DIVISOR_SUM" => SummatoryKind::DivisorSum,
                "SQUAREFREE_COUNT" => SummatoryKind::SquarefreeCount,
                other => {
                    return Err(Error::format(format!(
                        "checkpoint line {}: unknown kind {other:?}",
                        lineno + 1
                    )))
                }
            };
            let x: u64 = rec.x.parse().map_err(|e| {
                Error::format(format!("checkpoint line {}: bad x: {e}", lineno + 1))
            })?;
            let value: i128 = rec.value.parse().map_err(|e| {
                Error::format(format!("checkpoint line {}: bad value: {e}", lineno + 1))
            })?;
            let sv = SummatoryValue { x, kind, value };
            sv.validate()?;
            self.large.insert((kind, x), value);
            n += 1;
        }
        Ok(n)
    }

    fn ensure_phi_prefix(&mut self, len: usize) -> Result<()> {
        if self.phi_prefix.len() > len {
            return Ok(());
        }
        let tables = sieve_chunks(1, len as u64)?;
        let mut prefix = Vec::with_capacity(len + 1);
        prefix.push(0u64);
        let mut acc = 0u64;
        for t in &tables {
            for &p in &t.phi {
                acc = acc
                    .checked_add(p)
                    .ok_or_else(|| Error::internal("phi prefix overflow"))?;
                prefix.push(acc);
            }
        }
        self.phi_prefix = prefix;
        Ok(())
    }

    fn ensure_mertens_prefix(&mut self, len: usize) -> Result<()> {
        if self.mertens_prefix.len() > len {
            return Ok(());
        }
        let tables = sieve_chunks(1, len as u64)?;
        let mut prefix = Vec::with_capacity(len + 1);
        prefix.push(0i32);
        let mut acc = 0i32;
        for t in &tables {
            for &m in &t.mu {
                acc += i32::from(m);
                prefix.push(acc);
            }
        }
        self.mertens_prefix = prefix;
        Ok(())
    }
}

fn sieve_chunks(lo: u64, hi: u64) -> Result<Vec<crate::arith::ArithTable>> {
    let bounds: Vec<(u64, u64)> = {
        let mut v = Vec::new();
        let mut a = lo;
        while a <= hi {
            let b = (a + CHUNK - 1).min(hi);
            v.push((a, b));
            a = b + 1;
        }
        v
    };
    bounds
        .into_par_iter()
        .map(|(a, b)| sieve_segment_capped(a, b, CHUNK as usize))
        .collect()
}

fn prefix_len_for(x: u64) -> usize {
    let cube = (x as f64).powf(2.0 / 3.0) as usize;
    (2 * cube).clamp(1024, PREFIX_CAP)
}

/// Phi(x) by direct summation of sieved phi values. The oracle route.
pub fn phi_sum_brute(x: u64) -> Result<i128> {
    if x == 0 {
        return Err(Error::domain("phi_sum_brute: x must be >= 1"));
    }
    if x > BRUTE_MAX {
        return Err(Error::domain(format!(
            "phi_sum_brute: x = {x} exceeds the sieve bound {BRUTE_MAX}"
        )));
    }
    let tables = sieve_chunks(1, x)?;
    let mut total: i128 = 0;
    for t in &tables {
        let part: u128 = t.phi.iter().map(|&p| p as u128).sum();
        total = total
            .checked_add(part as i128)
            .ok_or_else(|| Error::internal("phi_sum_brute: accumulator overflow"))?;
    }
    Ok(total)
}

/// M(x) by direct summation of sieved mu values. The oracle route.
pub fn mertens_brute(x: u64) -> Result<i64> {
    if x == 0 {
        return Err(Error::domain("mertens_brute: x must be >= 1"));
    }
    if x > BRUTE_MAX {
        return Err(Error::domain(format!(
            "mertens_brute: x = {x} exceeds the sieve bound {BRUTE_MAX}"
        )));
    }
    let tables = sieve_chunks(1, x)?;
    let mut total: i64 = 0;
    for t in &tables {
        let part: i64 = t.mu.iter().map(|&m| i64::from(m)).sum();
        total += part;
    }
    Ok(total)
}

fn phi_sum_rec(x: u64, cache: &mut SummatoryCache) -> Result<i128> {
    if (x as usize) < cache.phi_prefix.len() {
        cache.hits += 1;
        return Ok(cache.phi_prefix[x as usize] as i128);
    }
    if let Some(v) = cache.get(SummatoryKind::PhiSum, x) {
        return Ok(v);
    }
    let mut s = triangular(x);
    let mut d = 2u64;
    while d <= x {
        let q = x / d;
        let d_hi = x / q;
        let inner = phi_sum_rec(q, cache)?;
        let term = inner
            .checked_mul((d_hi - d + 1) as i128)
            .ok_or_else(|| Error::internal("phi_sum_fast: accumulator overflow"))?;
        s = s
            .checked_sub(term)
            .ok_or_else(|| Error::internal("phi_sum_fast: accumulator overflow"))?;
        d = d_hi + 1;
    }
    cache.insert(SummatoryKind::PhiSum, x, s);
    Ok(s)
}

/// Phi(x) by the memoized divisor-grouping recursion; equals the brute route
/// wherever both are defined.
pub fn phi_sum_fast(x: u64, cache: &mut SummatoryCache) -> Result<i128> {
    if x == 0 {
        return Err(Error::domain("phi_sum_fast: x must be >= 1"));
    }
    if x > FAST_MAX {
        return Err(Error::domain(format!(
            "phi_sum_fast: x = {x} exceeds the bound {FAST_MAX}"
        )));
    }
    cache.ensure_phi_prefix(prefix_len_for(x).min(x as usize))?;
    phi_sum_rec(x, cache)
}

fn mertens_rec(x: u64, cache: &mut SummatoryCache) -> Result<i64> {
    if (x as usize) < cache.mertens_prefix.len() {
        cache.hits += 1;
        return Ok(i64::from(cache.mertens_prefix[x as usize]));
    }
    if let Some(v) = cache.get(SummatoryKind::Mertens, x) {
        return Ok(v as i64);
    }
    let mut s: i128 = 1;
    let mut d = 2u64;
    while d <= x {
        let q = x / d;
        let d_hi = x / q;
        let inner = mertens_rec(q, cache)? as i128;
        s = s
            .checked_sub(inner * (d_hi - d + 1) as i128)
            .ok_or_else(|| Error::internal("mertens_fast: accumulator overflow"))?;
        d = d_hi + 1;
    }
    let v = i64::try_from(s).map_err(|_| Error::internal("mertens_fast: value exceeds i64"))?;
    cache.insert(SummatoryKind::Mertens, x, s);
    Ok(v)
}

/// M(x) by the memoized recursion from the identity sum mu(n) [x/n] = 1.
pub fn mertens_fast(x: u64, cache: &mut SummatoryCache) -> Result<i64> {
    if x == 0 {
        return Err(Error::domain("mertens_fast: x must be >= 1"));
    }
    if x > FAST_MAX {
        return Err(Error::domain(format!(
            "mertens_fast: x = {x} exceeds the bound {FAST_MAX}"
        )));
    }
    cache.ensure_mertens_prefix(prefix_len_for(x).min(x as usize))?;
    mertens_rec(x, cache)
}

/// D(x) = sum_{d <= x} floor(x/d), exactly, by the hyperbola fold.
pub fn divisor_sum(x: u64) -> Result<i128> {
    if x == 0 {
        return Err(Error::domain("divisor_sum: x must be >= 1"));
    }
    if x > FAST_MAX {
        return Err(Error::domain(format!(
            "divisor_sum: x = {x} exceeds the bound {FAST_MAX}"
        )));
    }
    let s = x.isqrt();
    let mut total: i128 = 0;
    for d in 1..=s {
        total += (x / d) as i128;
    }
    total = total
        .checked_mul(2)
        .and_then(|t| t.checked_sub((s as i128) * (s as i128)))
        .ok_or_else(|| Error::internal("divisor_sum: accumulator overflow"))?;
    Ok(total)
}

/// Q(x) = #squarefree n <= x = sum_{d <= sqrt(x)} mu(d) floor(x/d^2).
pub fn squarefree_count(x: u64) -> Result<i128> {
    if x == 0 {
        return Err(Error::domain("squarefree_count: x must be >= 1"));
    }
    if x > FAST_MAX {
        return Err(Error::domain(format!(
            "squarefree_count: x = {x} exceeds the bound {FAST_MAX}"
        )));
    }
    let s = x.isqrt();
    let mut total: i128 = 0;
    for t in sieve_chunks(1, s)? {
        for (i, &m) in t.mu.iter().enumerate() {
            if m != 0 {
                let d = t.lo + i as u64;
                total += i128::from(m) * (x / (d * d)) as i128;
            }
        }
    }
    Ok(total)
}

/// sum_{n <= x} phi(n)/n as a reduced fraction. Practical well past the test
/// sizes, though the value itself has on the order of 0.6x bits.
pub fn phi_over_n_sum_exact(x: u64) -> Result<BigRational> {
    if x == 0 {
        return Err(Error::domain("phi_over_n_sum: x must be >= 1"));
    }
    if x > PHI_OVER_N_EXACT_MAX {
        return Err(Error::domain(format!(
            "phi_over_n_sum: x = {x} exceeds the exact-mode bound {PHI_OVER_N_EXACT_MAX}"
        )));
    }
    let mut acc = FracSum::new();
    for t in sieve_chunks(1, x)? {
        for (i, &p) in t.phi.iter().enumerate() {
            let n = t.lo + i as u64;
            acc.add_term(1, u128::from(p), u128::from(n));
        }
    }
    Ok(acc.into_ratio())
}

/// sum_{n <= x} phi(n)/n in compensated floating point.
pub fn phi_over_n_sum_float(x: u64) -> Result<f64> {
    if x == 0 {
        return Err(Error::domain("phi_over_n_sum: x must be >= 1"));
    }
    if x > BRUTE_MAX {
        return Err(Error::domain(format!(
            "phi_over_n_sum: x = {x} exceeds the float-mode bound {BRUTE_MAX}"
        )));
    }
    let mut k = KahanSum::new();
    for t in sieve_chunks(1, x)? {
        for (i, &p) in t.phi.iter().enumerate() {
            let n = t.lo + i as u64;
            k.add(p as f64 / n as f64);
        }
    }
    Ok(k.value())
}

/// Partial sum sum_{n <= x} mu(n) / n^s for real s > 0, compensated.
pub fn mobius_power_partial(x: u64, s: f64) -> Result<f64> {
    if x == 0 {
        return Err(Error::domain("mobius_power_partial: x must be >= 1"));
    }
    if x > BRUTE_MAX {
        return Err(Error::domain(format!(
            "mobius_power_partial: x = {x} exceeds the bound {BRUTE_MAX}"
        )));
    }
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::domain("mobius_power_partial: s must be > 0"));
    }
    let mut k = KahanSum::new();
    for t in sieve_chunks(1, x)? {
        for (i, &m) in t.mu.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let n = (t.lo + i as u64) as f64;
            let term = if s == 1.0 {
                1.0 / n
            } else if s == 2.0 {
                1.0 / (n * n)
            } else {
                n.powf(-s)
            };
            k.add(f64::from(m) * term);
        }
    }
    Ok(k.value())
}

/// k-th moment sum_{n <= x} mu(n)^k: the Mertens function for odd k, the
/// squarefree count for even k.
pub fn mobius_moment(x: u64, k: u32) -> Result<i128> {
    if k == 0 {
        return Err(Error::domain("mobius_moment: k must be >= 1"));
    }
    if x == 0 {
        return Err(Error::domain("mobius_moment: x must be >= 1"));
    }
    if x > BRUTE_MAX {
        return Err(Error::domain(format!(
            "mobius_moment: x = {x} exceeds the bound {BRUTE_MAX}"
        )));
    }
    if k % 2 == 1 {
        let mut cache = SummatoryCache::new();
        Ok(i128::from(mertens_fast(x, &mut cache)?))
    } else {
        squarefree_count(x)
    }
}

/// Exact (Phi(x), M(x)) at each checkpoint in one sieve pass. Used by tests
/// and the CLI to price many brute evaluations at the cost of the largest.
pub fn brute_checkpoints(xs: &[u64]) -> Result<Vec<(u64, i128, i64)>> {
    if xs.is_empty() {
        return Ok(Vec::new());
    }
    let max = *xs.iter().max().unwrap();
    if max == 0 || max > BRUTE_MAX {
        return Err(Error::domain("brute_checkpoints: x out of range"));
    }
    let mut sorted: Vec<u64> = xs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = Vec::with_capacity(sorted.len());
    let mut next = 0usize;
    let mut phi_acc: i128 = 0;
    let mut mu_acc: i64 = 0;
    let mut a = 1u64;
    while a <= max && next < sorted.len() {
        let b = (a + CHUNK - 1).min(max);
        let t = sieve_segment_capped(a, b, CHUNK as usize)?;
        for n in a..=b {
            let i = (n - a) as usize;
            phi_acc += t.phi[i] as i128;
            mu_acc += i64::from(t.mu[i]);
            while next < sorted.len() && sorted[next] == n {
                out.push((n, phi_acc, mu_acc));
                next += 1;
            }
        }
        a = b + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sieve_segment;

    #[test]
    fn brute_reference_values() {
        assert_eq!(phi_sum_brute(1).unwrap(), 1);
        assert_eq!(phi_sum_brute(10).unwrap(), 32);
        assert_eq!(phi_sum_brute(100).unwrap(), 3044);
        assert_eq!(mertens_brute(1).unwrap(), 1);
        assert_eq!(mertens_brute(10).unwrap(), -1);
        assert_eq!(mertens_brute(100).unwrap(), 1);
    }

    #[test]
    fn fast_matches_brute_small() {
        let mut cache = SummatoryCache::new();
        for x in 1..=2000u64 {
            assert_eq!(
                phi_sum_fast(x, &mut cache).unwrap(),
                phi_sum_brute(x).unwrap(),
                "Phi({x})"
            );
            assert_eq!(
                mertens_fast(x, &mut cache).unwrap(),
                mertens_brute(x).unwrap(),
                "M({x})"
            );
        }
    }

    #[test]
    fn divisor_sum_examples() {
        assert_eq!(divisor_sum(1).unwrap(), 1);
        // Hand oracle: sum floor(10/d) = 10+5+3+2+2+1+1+1+1+1 = 27
        assert_eq!(divisor_sum(10).unwrap(), 27);
        assert_eq!(divisor_sum(100).unwrap(), 482);
        assert!(matches!(divisor_sum(0), Err(Error::Domain(_))));
    }

    #[test]
    fn divisor_sum_matches_sieved_d_exhaustively() {
        let t = sieve_segment(1, 10_000).unwrap();
        let mut acc: i128 = 0;
        for n in 1..=10_000u64 {
            acc += i128::from(t.d(n));
            assert_eq!(divisor_sum(n).unwrap(), acc, "D({n})");
        }
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_count(1).unwrap(), 1);
        // {1,2,3,5,6,7,10}
        assert_eq!(squarefree_count(10).unwrap(), 7);
        let t = sieve_segment(1, 100).unwrap();
        let brute: i128 = (1..=100u64).map(|n| i128::from(t.mu(n) * t.mu(n))).sum();
        assert_eq!(squarefree_count(100).unwrap(), brute);
    }

    #[test]
    fn phi_over_n_examples() {
        assert_eq!(
            phi_over_n_sum_exact(1).unwrap(),
            BigRational::new(1.into(), 1.into())
        );
        assert_eq!(
            phi_over_n_sum_exact(10).unwrap(),
            BigRational::new(1307.into(), 210.into())
        );
        let exact = phi_over_n_sum_exact(100_000).unwrap();
        let approx = crate::exact::big_ratio_to_f64(exact.numer(), exact.denom());
        let float = phi_over_n_sum_float(100_000).unwrap();
        assert!((approx - float).abs() < 1e-6, "{approx} vs {float}");
    }

    #[test]
    fn mobius_power_examples() {
        // sum mu(n)/n over n <= 10 is 19/210
        let v = mobius_power_partial(10, 1.0).unwrap();
        assert!((v - 19.0 / 210.0).abs() < 1e-14);
        let v2 = mobius_power_partial(10, 2.0).unwrap();
        let exact = 1.0 - 1.0 / 4.0 - 1.0 / 9.0 - 1.0 / 25.0 + 1.0 / 36.0 - 1.0 / 49.0
            + 1.0 / 100.0;
        assert!((v2 - exact).abs() < 1e-14);
        assert!((v2 - 0.616258).abs() < 1e-6);
        assert_eq!(mobius_power_partial(1, 7.5).unwrap(), 1.0);
        assert!(matches!(
            mobius_power_partial(10, 0.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn mobius_moment_parity() {
        assert_eq!(mobius_moment(10, 2).unwrap(), 7);
        assert_eq!(mobius_moment(10, 3).unwrap(), -1);
        assert_eq!(mobius_moment(1, 9).unwrap(), 1);
        assert!(matches!(mobius_moment(10, 0), Err(Error::Domain(_))));
        // Parity collapse against independent brute powers.
        let t = sieve_segment(1, 2000).unwrap();
        let mut acc = [0i128; 5];
        for n in 1..=2000u64 {
            let m = i128::from(t.mu(n));
            for (k, a) in acc.iter_mut().enumerate() {
                *a += m.pow(k as u32 + 1);
            }
            if n % 397 == 0 {
                for k in 1..=4u32 {
                    assert_eq!(
                        mobius_moment(n, k).unwrap(),
                        acc[(k - 1) as usize],
                        "moment k={k} at {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn cache_counters_and_consistency() {
        let mut cache = SummatoryCache::new();
        let v1 = phi_sum_fast(100_000, &mut cache).unwrap();
        let (h0, m0) = (cache.hits(), cache.misses());
        assert!(m0 > 0);
        let v2 = phi_sum_fast(100_000, &mut cache).unwrap();
        assert_eq!(v1, v2);
        assert!(cache.hits() > h0);
        // Cached values equal fresh recomputation.
        let mut fresh = SummatoryCache::new();
        assert_eq!(phi_sum_fast(100_000, &mut fresh).unwrap(), v1);
    }

    #[test]
    fn checkpoint_roundtrip() {
        let mut cache = SummatoryCache::new();
        phi_sum_fast(50_000, &mut cache).unwrap();
        mertens_fast(50_000, &mut cache).unwrap();
        let mut buf = Vec::new();
        let written = cache.write_checkpoints(&mut buf).unwrap();
        assert!(written > 0);
        let mut reloaded = SummatoryCache::new();
        let read = reloaded.read_checkpoints(&buf[..]).unwrap();
        assert_eq!(written, read);
        let mut fresh = SummatoryCache::new();
        assert_eq!(
            phi_sum_fast(50_000, &mut reloaded).unwrap(),
            phi_sum_fast(50_000, &mut fresh).unwrap()
        );
    }

    #[test]
    fn checkpoint_rejects_garbage() {
        let mut cache = SummatoryCache::new();
        assert!(matches!(
            cache.read_checkpoints("not json\n".as_bytes()),
            Err(Error::Format(_))
        ));
        let bad_kind = r#"{"kind":"NOPE","x":"5","value":"1"}"#.to_string() + "\n";
        assert!(matches!(
            cache.read_checkpoints(bad_kind.as_bytes()),
            Err(Error::Format(_))
        ));
        let bad_range = r#"{"kind":"MERTENS","x":"5","value":"99"}"#.to_string() + "\n";
        assert!(matches!(
            cache.read_checkpoints(bad_range.as_bytes()),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn brute_checkpoints_match_single_calls() {
        let xs = [10u64, 100, 12345, 54321];
        let got = brute_checkpoints(&xs).unwrap();
        for &(x, phi, mu) in &got {
            assert_eq!(phi, phi_sum_brute(x).unwrap());
            assert_eq!(mu, mertens_brute(x).unwrap());
        }
    }

    #[test]
    fn domain_errors() {
        let mut cache = SummatoryCache::new();
        assert!(matches!(phi_sum_brute(0), Err(Error::Domain(_))));
        assert!(matches!(phi_sum_fast(0, &mut cache), Err(Error::Domain(_))));
        assert!(matches!(
            phi_sum_fast(FAST_MAX + 1, &mut cache),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            phi_sum_brute(BRUT_MAX_PLUS_ONE),
            Err(Error::Domain(_))
        ));
    }

    const BRUT_MAX_PLUS_ONE: u64 = BRUTE_MAX + 1;

    #[test]
    fn sylvester_and_mobius_identities_sampled() {
        // Exhaustive versions live in the acceptance suite; spot-check here.
        let t = sieve_segment(1, 3000).unwrap();
        for &x in &[1u64, 2, 3, 10, 100, 999, 3000] {
            let mut sylvester: i128 = 0;
            let mut mobius: i128 = 0;
            for n in 1..=x {
                sylvester += i128::from(t.phi(n)) * (x / n) as i128;
                mobius += i128::from(t.mu(n)) * (x / n) as i128;
            }
            assert_eq!(sylvester, triangular(x), "Sylvester at {x}");
            assert_eq!(mobius, 1, "Mobius identity at {x}");
        }
    }
}
