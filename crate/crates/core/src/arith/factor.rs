//! Factorization and divisor enumeration.
//!
//! Trial division up to [`TRIAL_LIMIT`], then Brent's variant of Pollard rho
//! on the remaining cofactor. Primality is Miller–Rabin with the first twelve
//! prime bases, which is deterministic below 3.3·10²⁴.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use super::Integer;
use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1_000_000;
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Prime factorization of `|n|` as ascending `(prime, exponent)` pairs.
/// Returns an empty list for `|n| ≤ 1`.
pub fn factorize(n: &Integer) -> Vec<(Integer, u32)> {
    let mut m = n.magnitude().clone();
    let mut out: BTreeMap<BigUint, u32> = BTreeMap::new();
    if m.is_zero() {
        return Vec::new();
    }

    let push = |p: BigUint, out: &mut BTreeMap<BigUint, u32>| *out.entry(p).or_insert(0) += 1;

    for p in std::iter::once(2u64).chain((3..).step_by(2)) {
        if p > TRIAL_LIMIT {
            break;
        }
        let bp = BigUint::from(p);
        if &bp * &bp > m {
            break;
        }
        while (&m % &bp).is_zero() {
            m /= &bp;
            push(bp.clone(), &mut out);
        }
    }

    let mut stack = vec![m];
    while let Some(c) = stack.pop() {
        if c.is_one() {
            continue;
        }
        if c <= BigUint::from(TRIAL_LIMIT) * BigUint::from(TRIAL_LIMIT) || is_prime_biguint(&c) {
            // Every factor below the trial limit is gone, so a cofactor under limit² is prime.
            push(c, &mut out);
            continue;
        }
        let d = rho_split(&c);
        stack.push(&c / &d);
        stack.push(d);
    }

    out.into_iter()
        .map(|(p, e)| (BigInt::from(p), e))
        .collect()
}

/// All positive divisors of `|n|`, ascending.
pub fn divisors(n: &Integer) -> Result<Vec<Integer>> {
    if n.is_zero() {
        return Err(Error::domain("divisors of zero"));
    }
    let mut divs = vec![Integer::one()];
    for (p, e) in factorize(n) {
        let current = divs.len();
        let mut pk = Integer::one();
        for _ in 0..e {
            pk *= &p;
            for i in 0..current {
                divs.push(&divs[i] * &pk);
            }
        }
    }
    divs.sort();
    Ok(divs)
}

pub fn is_probable_prime(n: &Integer) -> bool {
    match n.to_biguint() {
        Some(m) => is_prime_biguint(&m),
        None => false,
    }
}

fn is_prime_biguint(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        for &p in &MR_BASES {
            if small == p {
                return true;
            }
            if small % p == 0 {
                return false;
            }
        }
    } else if MR_BASES.iter().any(|&p| (n % p).is_zero()) {
        return false;
    }

    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;

    'bases: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite `n`.
fn rho_split(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    for c in 1u64.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BATCH: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if &g == n {
            // Batched product overshot; step singly from the last checkpoint.
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
    unreachable!("rho exhausted every increment")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_divisors(n: u64) -> Vec<u64> {
        (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
    }

    #[test]
    fn small_examples() {
        let d = |n: i64| -> Vec<i64> {
            divisors(&Integer::from(n))
                .unwrap()
                .iter()
                .map(|x| x.to_i64().unwrap())
                .collect()
        };
        assert_eq!(d(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(d(1), vec![1]);
        assert_eq!(d(97), vec![1, 97]);
        assert_eq!(d(-12), vec![1, 2, 3, 4, 6, 12]);
        assert!(matches!(divisors(&Integer::from(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn matches_brute_force_scan() {
        for n in (1..3000u64).chain([720720, 999_983, 1_000_000]) {
            let got: Vec<u64> = divisors(&Integer::from(n))
                .unwrap()
                .iter()
                .map(|x| x.to_u64().unwrap())
                .collect();
            assert_eq!(got, brute_divisors(n), "n={n}");
        }
    }

    #[test]
    fn rho_handles_large_semiprimes() {
        // Both factors exceed the trial-division limit.
        let p = Integer::from(1_000_003u64);
        let q = Integer::from(998_244_353u64);
        let f = factorize(&(&p * &q));
        assert_eq!(f, vec![(p.clone(), 1), (q.clone(), 1)]);

        let big_p: Integer = "1000000007".parse().unwrap();
        let big_q: Integer = "10000000019".parse().unwrap();
        let n = &big_p * &big_q * &big_p;
        assert_eq!(factorize(&n), vec![(big_p, 2), (big_q, 1)]);
    }

    #[test]
    fn primality() {
        assert!(is_probable_prime(&Integer::from(2)));
        assert!(!is_probable_prime(&Integer::from(1)));
        assert!(is_probable_prime(&"18446744073709551557".parse().unwrap()));
        // Carmichael number
        assert!(!is_probable_prime(&Integer::from(561)));
        assert!(!is_probable_prime(&"3825123056546413051".parse().unwrap()));
    }
}
