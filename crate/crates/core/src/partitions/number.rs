use super::PartitionError;

/// Möbius function.
pub fn mobius(n: i64) -> Result<i32, PartitionError> {
    if n < 1 {
        return Err(PartitionError::NonPositive(n));
    }
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Positive divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// `gcd(a, b)` with the convention `gcd(0, m) = m`.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}
