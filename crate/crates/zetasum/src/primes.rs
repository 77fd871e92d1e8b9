//! Prime sieving and the von Mangoldt function.

use crate::error::{Error, Result};
use std::sync::OnceLock;

/// Simple odd-only sieve of Eratosthenes; returns the primes up to `limit`.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    // bit k represents the odd number 2k+1
    let half = n / 2 + 1;
    let mut composite = vec![false; half];
    composite[0] = true; // 1
    let mut p = 3usize;
    while p * p <= n {
        if !composite[p / 2] {
            let mut m = p * p;
            while m <= n {
                composite[m / 2] = true;
                m += 2 * p;
            }
        }
        p += 2;
    }
    let mut primes = vec![2u64];
    primes.extend(
        (1..half)
            .filter(|&k| !composite[k] && 2 * k + 1 <= n)
            .map(|k| (2 * k + 1) as u64),
    );
    primes
}

const CACHED_LIMIT: u64 = 30_000_000;

fn cached_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve_primes(CACHED_LIMIT))
}

/// Visit every prime power p^k ≤ limit with its Λ value, ascending in p for
/// k = 1 and then by prime for higher powers. `f(p, k, p^k, ln p)`.
///
/// Uses the shared prime cache; `limit` must stay at or below 3·10^7.
pub fn for_each_prime_power(limit: u64, mut f: impl FnMut(u64, u32, u64, f64)) {
    assert!(
        limit <= CACHED_LIMIT,
        "for_each_prime_power limit {limit} exceeds the prime cache"
    );
    for &p in cached_primes() {
        if p > limit {
            break;
        }
        let lp = (p as f64).ln();
        f(p, 1, p, lp);
        if p <= limit / p {
            let mut n = p * p;
            let mut k = 2;
            loop {
                f(p, k, n, lp);
                if n > limit / p {
                    break;
                }
                n *= p;
                k += 1;
            }
        }
    }
}

/// Prime powers in [lo, hi] via a segmented sieve, for ranges whose upper
/// end exceeds the shared cache. `f(n, ln p)` for each n = p^k in range.
pub fn for_each_prime_power_in(lo: u64, hi: u64, mut f: impl FnMut(u64, f64)) -> Result<()> {
    if hi < lo || hi < 2 {
        return Ok(());
    }
    let lo = lo.max(2);
    if hi - lo > 2_000_000_000 || hi > 4_000_000_000_000 {
        return Err(Error::Resource(format!(
            "prime-power enumeration over [{lo}, {hi}] is too large"
        )));
    }
    let root = (hi as f64).sqrt() as u64 + 2;
    let base = sieve_primes(root);

    // powers p^k, k >= 2 need p <= sqrt(hi)
    for &p in &base {
        let lp = (p as f64).ln();
        let mut n = p * p;
        while n <= hi {
            if n >= lo {
                f(n, lp);
            }
            if n > hi / p {
                break;
            }
            n *= p;
        }
    }

    // primes in [lo, hi], segmented
    const SEG: u64 = 1 << 20;
    let mut seg_lo = lo;
    let mut flags = vec![false; SEG as usize];
    while seg_lo <= hi {
        let seg_hi = (seg_lo + SEG - 1).min(hi);
        let len = (seg_hi - seg_lo + 1) as usize;
        flags[..len].fill(false);
        for &p in &base {
            if p * p > seg_hi {
                break;
            }
            let mut m = (seg_lo + p - 1) / p * p;
            if m < p * p {
                m = p * p;
            }
            while m <= seg_hi {
                flags[(m - seg_lo) as usize] = true;
                m += p;
            }
        }
        for (i, &c) in flags[..len].iter().enumerate() {
            let n = seg_lo + i as u64;
            if !c && n >= 2 && n >= lo {
                f(n, (n as f64).ln());
            }
        }
        seg_lo = seg_hi + 1;
    }
    Ok(())
}

/// Λ(n): log p when n = p^k, else 0.
pub fn von_mangoldt(n: u64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let mut m = n;
    // strip the smallest prime factor; n is a prime power iff nothing else remains
    let mut p = 0u64;
    for q in 2..=3u64 {
        if m % q == 0 {
            p = q;
            break;
        }
    }
    if p == 0 {
        let mut q = 5u64;
        while q * q <= m {
            if m % q == 0 {
                p = q;
                break;
            }
            // wheel over 6k±1
            q += if q % 6 == 5 { 2 } else { 4 };
        }
        if p == 0 {
            return (n as f64).ln(); // n itself is prime
        }
    }
    while m % p == 0 {
        m /= p;
    }
    if m == 1 {
        (p as f64).ln()
    } else {
        0.0
    }
}
