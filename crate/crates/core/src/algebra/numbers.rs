//! Small number-theoretic helpers.

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

/// `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..).take_while(|d| d * d <= q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub fn is_prime_power(q: u64) -> bool {
    prime_power(q).is_some()
}

/// Exact integer square root, if `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&x| x * x == n)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(1024), Some((2, 10)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(97), Some((97, 1)));
        let brute: Vec<u64> = (2..200).filter(|&q| {
            (2..=q).filter(|&d| is_prime(d) && q % d == 0).count() == 1
        }).collect();
        let fast: Vec<u64> = (2..200).filter(|&q| is_prime_power(q)).collect();
        assert_eq!(brute, fast);
    }

    #[test]
    fn sqrt_and_binomial() {
        assert_eq!(exact_sqrt(324), Some(18));
        assert_eq!(exact_sqrt(323), None);
        assert_eq!(exact_sqrt(0), Some(0));
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(9, 4), 126);
        assert_eq!(binomial(3, 5), 0);
    }
}
