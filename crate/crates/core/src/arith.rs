//! Small integer helpers shared by the field and code layers.

pub use num_integer::{gcd, lcm};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Writes `q = p^e` with `p` prime, or returns `None`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = prime_factors(q as u64)[0] as u32;
    let (mut r, mut e) = (q, 0);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Multiplicative order of `q` modulo `n` (requires gcd(q, n) = 1, n >= 1).
pub fn mult_order(q: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut x = q % n;
    let mut r = 1;
    while x != 1 {
        x = x * q % n;
        r += 1;
    }
    r
}

/// Number of elements of a message space, saturating on overflow.
pub fn checked_pow(base: u128, exp: u32) -> u128 {
    base.checked_pow(exp).unwrap_or(u128::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_powers() {
        assert!(is_prime(2) && is_prime(13) && !is_prime(1) && !is_prime(49));
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(mult_order(3, 8), 2);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
