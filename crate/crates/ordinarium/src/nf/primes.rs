//! Prime sieve and a deterministic 64-bit primality test.

use crate::{Error, Result};

/// All primes ≤ x, ascending, by sieve of Eratosthenes.
pub fn primes_up_to(x: u64) -> Vec<u64> {
    if x < 2 {
        return vec![];
    }
    let n = x as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for u64 (the standard 7-base certificate).
pub fn is_prime_u64(n: u64) -> bool {
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
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
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

/// Check a claimed prime, for operations whose preconditions require one.
pub fn require_prime(n: u64) -> Result<()> {
    if is_prime_u64(n) {
        Ok(())
    } else {
        Err(Error::NotPrime(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_examples() {
        assert_eq!(primes_up_to(10), vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(2), vec![2]);
        let p30 = primes_up_to(30);
        assert_eq!(p30.len(), 10);
        assert_eq!(*p30.last().unwrap(), 29);
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
    }

    #[test]
    fn pi_values() {
        assert_eq!(primes_up_to(1_000).len(), 168);
        assert_eq!(primes_up_to(10_000).len(), 1229);
        assert_eq!(primes_up_to(100_000).len(), 9592);
    }

    #[test]
    fn mr_agrees_with_sieve() {
        let primes = primes_up_to(5_000);
        let mut idx = 0;
        for n in 0..=5_000u64 {
            let p = idx < primes.len() && primes[idx] == n;
            if p {
                idx += 1;
            }
            assert_eq!(is_prime_u64(n), p, "disagreement at {}", n);
        }
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64(3215031751)); // strong pseudoprime to bases 2,3,5,7
    }
}
