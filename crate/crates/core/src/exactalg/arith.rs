use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Greatest common divisor of a list; `0` for the empty list.
pub fn gcd_list(xs: &[u64]) -> u64 {
    xs.iter().fold(0, |acc, &x| acc.gcd(&x))
}

/// Least common multiple of a list; `1` for the empty list.
pub fn lcm_list(xs: &[u64]) -> u64 {
    xs.iter().fold(1, |acc, &x| acc.lcm(&x))
}

/// Ordinary binomial coefficient, `0` when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    gen_binomial(n as i64, k.min(n - k))
}

/// Binomial coefficient with an arbitrary integer upper index,
/// `m (m-1) ... (m-k+1) / k!`.
///
/// Agrees with [`binomial`] for `m >= 0` and gives `(-1)^k` at `m = -1`.
pub fn gen_binomial(m: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (m - i) is divisible by (i + 1) at every step
        acc *= BigInt::from(m) - BigInt::from(i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
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
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient; the number of primitive `n`-th roots of unity.
pub fn euler_phi(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    prime_factors(n)
        .into_iter()
        .fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}

/// Möbius function; `mobius(0)` is defined as `0`.
pub fn mobius(n: u64) -> i64 {
    if n == 0 {
        return 0;
    }
    let factors = prime_factors(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}
