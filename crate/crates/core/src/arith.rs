//! Small integer helpers shared by the group-theoretic modules.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Number of distinct prime divisors.
pub fn omega(n: u64) -> u32 {
    factorize(n).len() as u32
}

/// Index of Gamma_0(N) in PSL_2(Z): N * prod_{p | N} (1 + 1/p).
pub fn psi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p + 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn is_exact_divisor(n: u64, d: u64) -> bool {
    d >= 1 && n.is_multiple_of(d) && gcd(d, n / d) == 1
}

/// All d with d || n, ascending.
pub fn exact_divisors(n: u64) -> Vec<u64> {
    divisors(n)
        .into_iter()
        .filter(|&d| is_exact_divisor(n, d))
        .collect()
}

pub fn is_square(n: u64) -> bool {
    let r = n.sqrt();
    r * r == n
}

pub fn is_squarefree(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

pub fn is_square_big(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Level check shared by everything that relies on the trivial snake.
pub fn check_level(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidLevel);
    }
    if n.is_multiple_of(4) {
        return Err(Error::LevelDivisibleBy4(n));
    }
    if n.is_multiple_of(9) {
        return Err(Error::LevelDivisibleBy9(n));
    }
    Ok(())
}

/// Least nonnegative x with a*x = 1 (mod m), if it exists. For m = 1 this is 0.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let ext = a.mod_floor(m).extended_gcd(m);
    if !ext.gcd.is_one() {
        return None;
    }
    Some(ext.x.mod_floor(m))
}

/// Least nonnegative residue of `a` modulo a positive `m`.
pub fn modp(a: &BigInt, m: u64) -> u64 {
    let r = a.mod_floor(&BigInt::from(m));
    u64::try_from(r).expect("residue fits in u64")
}

pub fn divides(d: u64, x: &BigInt) -> bool {
    (x % BigInt::from(d)).is_zero()
}
