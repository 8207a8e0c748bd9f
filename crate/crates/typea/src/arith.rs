//! Small-integer number theory used across the crate.

use num_integer::Integer;

/// Prime factorization as (prime, exponent) pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
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

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

/// `Some((p, r))` when `q = p^r` with `r >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, r)] => Some((*p, *r)),
        _ => None,
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1];
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

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut acc: u128 = 1;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    base = acc as u64;
    base
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: i64, m: i64) -> Option<i64> {
    let e = a.rem_euclid(m).extended_gcd(&m);
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m))
}

/// Multiplicative order of `a` modulo `m` (requires `gcd(a, m) = 1`).
pub fn mult_order(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let phi = euler_phi(m);
    divisors(phi).into_iter().find(|&d| pow_mod(a, d, m) == 1).expect("unit has an order")
}

/// Largest divisor of `m` prime to `p`.
pub fn p_prime_part(mut m: u64, p: u64) -> u64 {
    if p < 2 {
        return m;
    }
    while m > 0 && m.is_multiple_of(p) {
        m /= p;
    }
    m
}

pub fn ipow(base: u64, exp: u32) -> u64 {
    base.checked_pow(exp).expect("integer power overflows u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_and_divisors() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(mult_order(2, 7), 3);
        assert_eq!(p_prime_part(12, 2), 3);
    }
}
