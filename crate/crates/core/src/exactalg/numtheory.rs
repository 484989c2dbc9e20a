//! Modular arithmetic helpers: powers, inverses, primality, square roots,
//! and random 31-bit primes for the default ground field.

use rand::Rng;

/// `a * b mod q` without overflow for `q < 2^63`.
#[inline]
pub fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

/// `a + b mod q`.
#[inline]
pub fn add_mod(a: u64, b: u64, q: u64) -> u64 {
    let s = a + b;
    if s >= q {
        s - q
    } else {
        s
    }
}

/// `a - b mod q`.
#[inline]
pub fn sub_mod(a: u64, b: u64, q: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + q - b
    }
}

/// `a^e mod q` by square-and-multiply.
pub fn pow_mod(mut a: u64, mut e: u64, q: u64) -> u64 {
    a %= q;
    let mut acc = 1 % q;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, q);
        }
        a = mul_mod(a, a, q);
        e >>= 1;
    }
    acc
}

/// Multiplicative inverse mod a prime `q`; `None` for `a == 0`.
pub fn inv_mod(a: u64, q: u64) -> Option<u64> {
    let a = a % q;
    if a == 0 {
        return None;
    }
    // Fermat: a^(q-2) mod q.
    Some(pow_mod(a, q - 2, q))
}

/// Deterministic Miller-Rabin for u64 (the listed bases are exact below 2^64).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A random prime in `[2^30, 2^31)`, the default ground-field size: large
/// enough that no degree used in practice is divisible by the characteristic.
pub fn random_prime_31<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range(1u64 << 30..1u64 << 31) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

/// Square root mod an odd prime via Tonelli-Shanks; `None` when `a` is a
/// non-residue.
pub fn sqrt_mod(a: u64, q: u64) -> Option<u64> {
    let a = a % q;
    if a == 0 {
        return Some(0);
    }
    if q == 2 {
        return Some(a);
    }
    if pow_mod(a, (q - 1) / 2, q) != 1 {
        return None;
    }
    if q % 4 == 3 {
        return Some(pow_mod(a, (q + 1) / 4, q));
    }
    // Tonelli-Shanks: q - 1 = s * 2^e with s odd.
    let mut s = q - 1;
    let mut e = 0;
    while s.is_multiple_of(2) {
        s /= 2;
        e += 1;
    }
    // Find a quadratic non-residue.
    let mut z = 2;
    while pow_mod(z, (q - 1) / 2, q) != q - 1 {
        z += 1;
    }
    let mut m = e;
    let mut c = pow_mod(z, s, q);
    let mut t = pow_mod(a, s, q);
    let mut r = pow_mod(a, s.div_ceil(2), q);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, q);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), q);
        m = i;
        c = mul_mod(b, b, q);
        t = mul_mod(t, c, q);
        r = mul_mod(r, b, q);
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primality_known_values() {
        assert!(is_prime(2));
        assert!(is_prime(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime(2_147_483_645));
        assert!(!is_prime(1));
        assert!(is_prime(1_073_741_827));
    }

    #[test]
    fn inverse_roundtrip() {
        let q = 2_147_483_647;
        for a in [1u64, 2, 5, 12345, q - 1] {
            let inv = inv_mod(a, q).unwrap();
            assert_eq!(mul_mod(a, inv, q), 1);
        }
        assert!(inv_mod(0, q).is_none());
    }

    #[test]
    fn sqrt_finds_roots() {
        let q = 2_147_483_647;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x = rng.gen_range(0..q);
            let sq = mul_mod(x, x, q);
            let r = sqrt_mod(sq, q).expect("square must have a root");
            assert!(r == x || r == q - x);
        }
    }

    #[test]
    fn random_prime_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..5 {
            let p = random_prime_31(&mut rng);
            assert!((1u64 << 30..1u64 << 31).contains(&p));
            assert!(is_prime(p));
        }
    }
}
