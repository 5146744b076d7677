//! Validated primes and desk-scale denominator factoring.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest cofactor the trial-division factorizer will accept.
pub const FACTOR_LIMIT: u64 = 1_000_000_000_000;

/// A prime number, validated at construction.
///
/// Indexes finite-adele components and p-adic fractional parts. Primes are
/// machine words: denominators beyond `FACTOR_LIMIT` are rejected elsewhere,
/// so every prime that can actually occur fits comfortably.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if is_prime_u64(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// `p^k` as a big integer.
    pub fn pow(self, k: u32) -> BigInt {
        BigInt::from(self.0).pow(k)
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Prime {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Prime {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Prime, D::Error> {
        let s = String::deserialize(d)?;
        let n: u64 = s.parse().map_err(serde::de::Error::custom)?;
        Prime::new(n).map_err(serde::de::Error::custom)
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set below covers all of u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors of a positive denominator, by trial division.
///
/// Small primes are stripped first; whatever cofactor remains after trial
/// division up to 10^6 must either fit under `FACTOR_LIMIT` (in which case
/// it is itself prime) or the input is rejected.
pub fn denominator_primes(den: &BigInt) -> Result<Vec<Prime>> {
    assert!(den.is_positive(), "denominators are positive");
    let mut primes = Vec::new();
    let mut rest = den.clone();
    let push = |p: u64, primes: &mut Vec<Prime>, rest: &mut BigInt| {
        let big = BigInt::from(p);
        if (&*rest % &big).is_zero() {
            primes.push(Prime(p));
            while (&*rest % &big).is_zero() {
                *rest /= &big;
            }
        }
    };
    push(2, &mut primes, &mut rest);
    let mut d: u64 = 3;
    while d <= 1_000_000 {
        if BigInt::from(d) * BigInt::from(d) > rest {
            break;
        }
        push(d, &mut primes, &mut rest);
        d += 2;
    }
    if !rest.is_one() {
        match rest.to_u64() {
            // no factor <= 10^6 remains, so a cofactor below 10^12 is prime
            Some(r) if r <= FACTOR_LIMIT => primes.push(Prime(r)),
            _ => return Err(Error::DenominatorTooLarge(den.to_string())),
        }
    }
    Ok(primes)
}
