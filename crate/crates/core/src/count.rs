//! Exact counts and the handful of closed-form numbers every module needs.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// An exact, unbounded, nonnegative count.
pub type Count = BigUint;

/// `C(n, k)` by the multiplicative formula; every intermediate quotient is exact.
pub fn binomial(n: u64, k: u64) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The `n`th Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> Count {
    binomial(2 * n, n) / (n + 1)
}

pub fn gcd(a: usize, b: usize) -> usize {
    num_integer::gcd(a, b)
}

pub fn gcd_all(values: &[usize]) -> usize {
    values.iter().fold(0, |g, &v| gcd(g, v))
}
