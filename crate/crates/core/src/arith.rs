//! Small integer number theory: primality, factoring, prime powers, p-parts.

use crate::{Error, Result};

/// Deterministic Miller–Rabin for u64 (the standard 12-witness set suffices
/// for the full u64 range).
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
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
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

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
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

/// Full factorization of `n` by trial division, as sorted (prime, multiplicity)
/// pairs. Intended for the desk-scale integers this crate meets (orders,
/// q^n − 1 for small parameters); trial division is plenty.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Trial division up to `bound` only. Returns the factored part and the
/// unfactored cofactor (1 when the factorization is complete).
pub fn factor_bounded(mut n: u64, bound: u64) -> (Vec<(u64, u32)>, u64) {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= bound && d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 && n <= bound.saturating_mul(bound) {
        // no divisor ≤ bound and n ≤ bound², so n is prime
        out.push((n, 1));
        n = 1;
    }
    (out, n)
}

/// Writes q = p^f with p prime, or errors.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    let fs = factor(q);
    match fs.as_slice() {
        [(p, f)] => Ok((*p, *f)),
        _ => Err(Error::NotPrimePower(q)),
    }
}

/// The p-part of n (largest power of p dividing n).
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

/// The p′-part of n (largest divisor coprime to p).
pub fn p_prime_part(n: u64, p: u64) -> u64 {
    n / p_part(n, p)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::Integer::lcm(&a, &b)
}

/// True iff n is a power of p (n = p^k, k ≥ 0). Order 1 counts.
pub fn is_p_power(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
    }

    #[test]
    fn primality_large() {
        assert!(is_prime(2_147_483_647)); // 2^31 − 1
        assert!(!is_prime(2_147_483_649));
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
    }

    #[test]
    fn factoring() {
        assert_eq!(factor(640), vec![(2, 7), (5, 1)]);
        assert_eq!(factor(1), vec![]);
        assert_eq!(factor(2u64.pow(20) - 1), vec![(3, 1), (5, 2), (11, 1), (31, 1), (41, 1)]);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(27).unwrap(), (3, 3));
        assert_eq!(prime_power(128).unwrap(), (2, 7));
        assert!(prime_power(12).is_err());
    }

    #[test]
    fn parts() {
        assert_eq!(p_part(12, 2), 4);
        assert_eq!(p_prime_part(12, 2), 3);
        assert!(is_p_power(1, 7));
        assert!(is_p_power(8, 2));
        assert!(!is_p_power(12, 2));
    }
}
