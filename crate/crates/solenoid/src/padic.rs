//! p-adic valuations and fractional parts of rationals.
//!
//! The key operation is `frac_p`: for a rational `q` it produces the unique
//! rational in `[0, 1)` with p-power denominator congruent to `q` modulo the
//! p-integral numbers. Summed over the primes of the denominator these
//! fractional parts recover `q` mod 1 (the global residue identity), which
//! is what makes finite adeles act as characters of Q later on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::primes::{denominator_primes, Prime};
use crate::rat::Rat;

/// A p-adic fractional part: a rational in `[0, 1)` whose denominator is a
/// power of `prime` (possibly 1). Represents a class in `Q_p / Z_p`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PAdicFrac {
    prime: Prime,
    value: Rat,
}

impl PAdicFrac {
    pub fn new(prime: Prime, value: Rat) -> Result<PAdicFrac> {
        let ok_range = !value.is_negative() && value < Rat::one();
        if !ok_range || !is_power_of(value.denom(), prime) {
            return Err(Error::InvalidPAdicFrac {
                prime: prime.get(),
                value: value.to_string(),
            });
        }
        Ok(PAdicFrac { prime, value })
    }

    pub fn zero(prime: Prime) -> PAdicFrac {
        PAdicFrac {
            prime,
            value: Rat::zero(),
        }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn value(&self) -> &Rat {
        &self.value
    }

    pub fn into_value(self) -> Rat {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

fn is_power_of(n: &BigInt, p: Prime) -> bool {
    let p = BigInt::from(p.get());
    let mut n = n.clone();
    while n > BigInt::one() {
        let (quot, rem) = n.div_rem(&p);
        if !rem.is_zero() {
            return false;
        }
        n = quot;
    }
    n.is_one()
}

/// Extended Euclid with a pinned normalization.
///
/// Returns `(g, alpha, beta)` with `alpha*m + beta*n = g = gcd(m, n)` and
/// `0 <= beta < m/g`, which makes the output deterministic. Requires
/// `m, n >= 1`.
pub fn bezout(m: &BigInt, n: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    if !m.is_positive() || !n.is_positive() {
        return Err(Error::BezoutRange);
    }
    let ext = m.extended_gcd(n);
    let modulus = m / &ext.gcd;
    let beta = ext.y.mod_floor(&modulus);
    let alpha = (&ext.gcd - &beta * n) / m;
    Ok((ext.gcd, alpha, beta))
}

/// The exponent of `p` in a nonzero rational; negative iff `p` divides the
/// denominator. Zero has no valuation and is rejected.
pub fn valuation(q: &Rat, p: Prime) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    let count = |n: &BigInt| -> i64 {
        let p = BigInt::from(p.get());
        let mut n = n.clone();
        let mut k = 0;
        loop {
            let (quot, rem) = n.div_rem(&p);
            if !rem.is_zero() {
                return k;
            }
            n = quot;
            k += 1;
        }
    };
    let on_top = count(q.numer());
    if on_top > 0 {
        Ok(on_top)
    } else {
        Ok(-count(q.denom()))
    }
}

/// The p-adic fractional part of `q`.
///
/// The result `r` is the unique rational with `0 <= r < 1`, p-power
/// denominator, and `q - r` p-integral. When `v_p(q) = -n < 0`, write
/// `q = q0 / (q1 p^n)` and pick Bezout data `alpha p^n + beta q1 = 1`;
/// then `r = q0 beta / p^n` reduced into `[0, 1)`. Otherwise `r = 0`.
pub fn frac_p(q: &Rat, p: Prime) -> PAdicFrac {
    if q.is_zero() {
        return PAdicFrac::zero(p);
    }
    let v = valuation(q, p).expect("q is nonzero");
    if v >= 0 {
        return PAdicFrac::zero(p);
    }
    let n = (-v) as u32;
    let p_pow = p.pow(n);
    let q1 = q.denom() / &p_pow;
    let (_, _, beta) = bezout(&p_pow, &q1).expect("both factors are positive");
    let residue = (q.numer() * beta).mod_floor(&p_pow);
    PAdicFrac {
        prime: p,
        value: Rat::from_big(residue, p_pow),
    }
}

/// All nonzero p-adic fractional parts of `q`, keyed by the primes of its
/// denominator. Their sum is congruent to `q` mod Z.
pub fn global_frac_parts(q: &Rat) -> Result<BTreeMap<Prime, PAdicFrac>> {
    let mut parts = BTreeMap::new();
    for p in denominator_primes(q.denom())? {
        parts.insert(p, frac_p(q, p));
    }
    Ok(parts)
}

/// Split `q = u - v` with `u` p-integral and `v` in `[0, 1)` with p-power
/// denominator. The canonical choice is `v = frac_p(-q)`, `u = q + v`.
pub fn decompose(q: &Rat, p: Prime) -> (Rat, Rat) {
    let v = frac_p(&-q, p).into_value();
    let u = q + &v;
    (u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn r(num: i64, den: i64) -> Rat {
        Rat::new(num, den)
    }

    /// Independent oracle: search `c / p^j` for the p-adic fractional part.
    /// Only usable when the p-part of the denominator is small.
    fn frac_p_brute(q: &Rat, prime: Prime) -> Rat {
        let mut den = BigInt::one();
        let pb = BigInt::from(prime.get());
        for _ in 0..=20 {
            let mut c = BigInt::zero();
            while c < den {
                let cand = Rat::from_big(c.clone(), den.clone());
                let diff = q - &cand;
                let p_integral = diff.is_zero()
                    || valuation(&diff, prime).unwrap() >= 0;
                if p_integral {
                    return cand;
                }
                c += 1;
            }
            den *= &pb;
        }
        panic!("no fractional part found for {q} at {prime}");
    }

    #[test]
    fn bezout_matches_extended_euclid_oracle() {
        // (5, 2): g = 1, beta = 3 in [0, 5), alpha = (1 - 6)/5 = -1
        let (g, a, b) = bezout(&BigInt::from(5), &BigInt::from(2)).unwrap();
        assert_eq!(
            (g, a, b),
            (BigInt::from(1), BigInt::from(-1), BigInt::from(3))
        );
        // (1, n): identity case
        let (g, a, b) = bezout(&BigInt::from(1), &BigInt::from(977)).unwrap();
        assert_eq!((g, a, b), (BigInt::from(1), BigInt::from(1), BigInt::from(0)));
        // (6, 4): g = 2, beta normalized to 2 in [0, 3), alpha = -1
        let (g, a, b) = bezout(&BigInt::from(6), &BigInt::from(4)).unwrap();
        assert_eq!(
            (g, a, b),
            (BigInt::from(2), BigInt::from(-1), BigInt::from(2))
        );
    }

    #[test]
    fn bezout_identity_holds_on_a_grid() {
        for m in 1i64..=40 {
            for n in 1i64..=40 {
                let (g, a, b) = bezout(&BigInt::from(m), &BigInt::from(n)).unwrap();
                assert_eq!(&a * m + &b * n, g, "identity at ({m}, {n})");
                assert_eq!(g, BigInt::from(m.gcd(&n)));
                let modulus = BigInt::from(m) / &g;
                assert!(b >= BigInt::zero() && b < modulus, "beta range at ({m}, {n})");
            }
        }
    }

    #[test]
    fn bezout_rejects_nonpositive() {
        assert_eq!(
            bezout(&BigInt::from(0), &BigInt::from(2)),
            Err(Error::BezoutRange)
        );
        assert_eq!(
            bezout(&BigInt::from(3), &BigInt::from(-1)),
            Err(Error::BezoutRange)
        );
    }

    #[test]
    fn valuation_reads_off_factorizations() {
        assert_eq!(valuation(&r(3, 10), p(2)).unwrap(), -1);
        assert_eq!(valuation(&r(12, 1), p(2)).unwrap(), 2);
        assert_eq!(valuation(&r(3, 10), p(7)).unwrap(), 0);
        assert_eq!(valuation(&r(-9, 4), p(3)).unwrap(), 2);
        assert_eq!(valuation(&Rat::zero(), p(5)), Err(Error::ValuationOfZero));
    }

    #[test]
    fn frac_p_frozen_values_match_brute_force() {
        let cases = [
            (r(3, 10), 5, r(4, 5)),
            (r(3, 10), 2, r(1, 2)),
            (r(5, 9), 3, r(5, 9)),
            (r(-3, 10), 5, r(1, 5)),
        ];
        for (q, prime, expect) in cases {
            let prime = p(prime);
            assert_eq!(frac_p_brute(&q, prime), expect, "oracle at {q}");
            assert_eq!(frac_p(&q, prime).into_value(), expect, "impl at {q}");
        }
        // integers are p-integral at every prime
        for k in [-7i64, 0, 1, 42] {
            assert!(frac_p(&Rat::from_int(k), p(3)).is_zero());
        }
    }

    #[test]
    fn frac_p_characterization() {
        let samples = [
            r(3, 10),
            r(-3, 10),
            r(7, 8),
            r(22, 27),
            r(-1, 6),
            r(355, 113),
            r(9, 250),
        ];
        for q in &samples {
            for prime in [2u64, 3, 5, 7] {
                let prime = p(prime);
                let part = frac_p(q, prime);
                let v = part.value();
                assert!(!v.is_negative() && *v < Rat::one());
                let diff = q - v;
                assert!(
                    diff.is_zero() || valuation(&diff, prime).unwrap() >= 0,
                    "q - r must be p-integral for {q} at {prime}"
                );
                // denominator is a pure prime power by the PAdicFrac invariant
                PAdicFrac::new(prime, v.clone()).unwrap();
            }
        }
    }

    #[test]
    fn global_parts_sum_to_q_mod_one() {
        // 3/10 -> {2: 1/2, 5: 4/5}, sum 13/10 = 3/10 mod 1
        let parts = global_frac_parts(&r(3, 10)).unwrap();
        let keys: Vec<u64> = parts.keys().map(|p| p.get()).collect();
        assert_eq!(keys, vec![2, 5]);
        assert_eq!(parts[&p(2)].value(), &r(1, 2));
        assert_eq!(parts[&p(5)].value(), &r(4, 5));

        // 1/6 -> {2: 1/2, 3: 2/3}, sum 7/6 = 1/6 mod 1
        let parts = global_frac_parts(&r(1, 6)).unwrap();
        assert_eq!(parts[&p(2)].value(), &r(1, 2));
        assert_eq!(parts[&p(3)].value(), &r(2, 3));

        // integers decompose trivially
        assert!(global_frac_parts(&Rat::from_int(12)).unwrap().is_empty());

        for q in [r(3, 10), r(1, 6), r(-22, 105), r(977, 30)] {
            let sum = global_frac_parts(&q)
                .unwrap()
                .values()
                .fold(Rat::zero(), |acc, part| acc + part.value());
            assert!((sum - &q).is_integer(), "residue identity at {q}");
        }
    }

    #[test]
    fn decompose_frozen_values() {
        // brute-force oracle: v = frac_p(-q) searched directly
        let five = p(5);
        let v = frac_p_brute(&r(-3, 10), five);
        assert_eq!(v, r(1, 5));
        assert_eq!(decompose(&r(3, 10), five), (r(1, 2), r(1, 5)));

        let three = p(3);
        let v = frac_p_brute(&r(1, 6), three);
        assert_eq!(v, r(2, 3));
        assert_eq!(decompose(&r(-1, 6), three), (r(1, 2), r(2, 3)));

        // integers decompose with v = 0
        assert_eq!(decompose(&Rat::from_int(9), five), (r(9, 1), Rat::zero()));
    }

    #[test]
    fn decompose_properties() {
        for q in [r(3, 10), r(-22, 105), r(9, 250), r(1, 2)] {
            for prime in [2u64, 3, 5] {
                let prime = p(prime);
                let (u, v) = decompose(&q, prime);
                assert_eq!(&u - &v, q);
                assert!(u.is_zero() || valuation(&u, prime).unwrap() >= 0);
                assert!(!v.is_negative() && v < Rat::one());
                PAdicFrac::new(prime, v).unwrap();
            }
        }
    }

    #[test]
    fn padic_frac_invariants_enforced() {
        assert!(PAdicFrac::new(p(5), r(4, 5)).is_ok());
        assert!(PAdicFrac::new(p(5), r(1, 10)).is_err()); // 10 is not a 5-power
        assert!(PAdicFrac::new(p(5), r(6, 5)).is_err()); // out of range
        assert!(PAdicFrac::new(p(5), r(-1, 5)).is_err());
    }
}
