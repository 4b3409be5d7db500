//! Elementary number theory on machine integers.

pub use num_integer::{gcd, lcm};

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
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

/// All positive divisors in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (q, e) in factorize(n) {
        let len = out.len();
        let mut pw = 1;
        for _ in 0..e {
            pw *= q;
            for i in 0..len {
                out.push(out[i] * pw);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factorize(n).into_iter().fold(n, |acc, (q, _)| acc / q * (q - 1))
}

/// `b^e mod m`.
pub fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut base = (b % m) as u128;
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `a` modulo `m`; `gcd(a, m) = 1` is required.
pub fn mult_order(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * (a % m) % m;
        k += 1;
    }
    k
}

/// Least primitive root modulo the prime `p` (1 for `p = 2`).
pub fn least_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    (2..p).find(|&u| mult_order(u, p) == p - 1).expect("prime modulus")
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i128) as u64)
}

/// `n!`, saturating at `u64::MAX`.
pub fn factorial(n: u64) -> u64 {
    (1..=n).fold(1u64, |acc, k| acc.saturating_mul(k))
}

/// Exponent of the prime `q` in `n`.
pub fn valuation(mut n: u64, q: u64) -> u32 {
    let mut e = 0;
    while n > 0 && n.is_multiple_of(q) {
        n /= q;
        e += 1;
    }
    e
}

/// Integer power with overflow check.
pub fn checked_pow(b: u64, e: u32) -> Option<u64> {
    b.checked_pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_roots() {
        let got: Vec<u64> = [3, 5, 7, 11, 23].iter().map(|&p| least_primitive_root(p)).collect();
        assert_eq!(got, vec![2, 2, 3, 2, 5]);
    }

    #[test]
    fn factor_and_divisors() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(totient(12), 4);
        assert_eq!(inv_mod(3, 7), Some(5));
    }
}
