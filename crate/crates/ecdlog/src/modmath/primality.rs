use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Primality test: deterministic trial division below 2^20, Miller-Rabin
/// with a fixed witness set above. The fixed witnesses make the test
/// deterministic for every modulus below 3.3 * 10^24, which covers all
/// desk-scale curves; production-scale moduli (P-256 and friends) get a
/// strong probabilistic check.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    if n.bits() <= 20 {
        let n = n.to_u64_digits().first().copied().unwrap_or(0);
        return trial_division(n);
    }
    if n.is_even() {
        return false;
    }
    // Sprp witnesses from Sorenson & Webster; deterministic below 3.3e24.
    const WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    let n_minus_1 = n - BigUint::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'next: for &a in &WITNESSES {
        let a = BigUint::from(a) % n;
        if a.is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'next;
            }
        }
        return false;
    }
    true
}

fn trial_division(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
