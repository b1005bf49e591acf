//! Small-integer number theory helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Prime factorization of `m` by trial division, as (prime, exponent) pairs.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= m {
        if m % q == 0 {
            let mut e = 0;
            while m % q == 0 {
                m /= q;
                e += 1;
            }
            out.push((q, e));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// The Möbius function.
pub fn moebius(m: u64) -> Result<i32> {
    if m == 0 {
        return Err(Error::Domain("moebius(0) is undefined".into()));
    }
    let f = factorize(m);
    if f.iter().any(|&(_, e)| e > 1) {
        Ok(0)
    } else if f.len() % 2 == 0 {
        Ok(1)
    } else {
        Ok(-1)
    }
}

pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    factorize(m).len() == 1 && factorize(m)[0].1 == 1
}

/// All positive divisors of `m`, ascending.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&m| is_prime(m)).collect()
}

pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `a` modulo `m`; `None` when gcd(a, m) != 1.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if a.gcd(&m) != 1 {
        return None;
    }
    // order divides phi(m); m is prime in every caller, but handle the general case.
    let phi = factorize(m)
        .iter()
        .fold(1u64, |acc, &(q, e)| acc * (q - 1) * q.pow(e - 1));
    divisors(phi).into_iter().find(|&d| mod_pow(a, d, m) == 1)
}

/// Least primitive root modulo the prime `q`.
pub fn least_primitive_root(q: u64) -> Result<u64> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q == 2 {
        return Ok(1);
    }
    let primes: Vec<u64> = factorize(q - 1).into_iter().map(|(r, _)| r).collect();
    (2..q)
        .find(|&g| primes.iter().all(|&r| mod_pow(g, (q - 1) / r, q) != 1))
        .ok_or_else(|| Error::InternalInconsistency(format!("no primitive root mod {q}")))
}

/// Exact p-adic valuation of a nonzero integer.
pub fn valuation(m: &BigInt, p: u64) -> Result<u32> {
    if m.is_zero() {
        return Err(Error::Domain("valuation of zero".into()));
    }
    let p = BigInt::from(p);
    let mut m = m.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Ok(v);
        }
        m = q;
        v += 1;
    }
}

/// `p^k` as a `u128`, or `None` on overflow.
pub fn checked_pow(p: u64, k: u32) -> Option<u128> {
    (p as u128).checked_pow(k)
}

pub fn big_pow(p: u64, k: u64) -> BigInt {
    num_traits::pow(BigInt::from(p), k as usize)
}

pub fn lcm_upto(n: u64) -> u64 {
    (1..=n).fold(1u64, |acc, k| acc.lcm(&k))
}

pub(crate) fn big_gcd_all<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    it.into_iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}
