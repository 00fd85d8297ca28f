use crate::error::{Error, Result};

/// Largest prime accepted unless the caller raises the bound.
pub const DEFAULT_PRIME_BOUND: u32 = 97;

/// Trial division.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Accepts `p` only if it is an odd prime no larger than `bound`.
pub fn validate_prime(p: u32, bound: u32) -> Result<u32> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::Usage(format!("{p} is not an odd prime")));
    }
    if p > bound {
        return Err(Error::Usage(format!(
            "prime {p} exceeds the configured bound {bound}"
        )));
    }
    Ok(p)
}

/// Odd primes in `lo..=hi`.
pub fn odd_primes_in(lo: u32, hi: u32) -> Vec<u32> {
    (lo.max(3)..=hi)
        .filter(|&n| n % 2 == 1 && is_prime(n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_even_and_composite() {
        assert!(validate_prime(2, 97).is_err());
        assert!(validate_prime(4, 97).is_err());
        assert!(validate_prime(9, 97).is_err());
        assert!(validate_prime(1, 97).is_err());
        assert!(validate_prime(0, 97).is_err());
        assert_eq!(validate_prime(13, 97), Ok(13));
    }

    #[test]
    fn enforces_bound() {
        assert!(validate_prime(101, 97).is_err());
        assert_eq!(validate_prime(101, 101), Ok(101));
    }

    #[test]
    fn prime_ranges() {
        assert_eq!(odd_primes_in(3, 13), vec![3, 5, 7, 11, 13]);
        assert_eq!(odd_primes_in(1, 3), vec![3]);
        assert!(odd_primes_in(8, 10).is_empty());
    }
}
