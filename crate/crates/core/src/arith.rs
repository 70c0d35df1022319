//! Elementary integer helpers: gcd, 3-adic valuation, multiplicative order.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exponent of 3 in n. Returns 0 for n = 0 as there is no finite answer.
pub fn v3(mut n: u64) -> u32 {
    if n == 0 {
        return 0;
    }
    let mut e = 0;
    while n.is_multiple_of(3) {
        n /= 3;
        e += 1;
    }
    e
}

/// Multiplicative order of a modulo n, by iteration.
pub fn ord(n: u64, a: u64) -> Result<u64> {
    if n == 0 || gcd(a % n, n) != 1 {
        return Err(Error::NotCoprime { n, a });
    }
    if n == 1 {
        return Ok(1);
    }
    let step = u128::from(a % n);
    let n128 = u128::from(n);
    let mut x = step;
    let mut s = 1;
    while x != 1 {
        x = x * step % n128;
        s += 1;
    }
    Ok(s)
}

/// x^e mod n.
pub fn pow_mod(base: u64, mut e: u64, n: u64) -> u64 {
    let n = u128::from(n);
    let mut b = u128::from(base) % n;
    let mut acc = 1 % n;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % n;
        }
        b = b * b % n;
        e >>= 1;
    }
    acc as u64
}

/// v3(2^f + 1), computed by reducing modulo increasing powers of 3.
///
/// Saturates at 39, the largest j with 3^j < 2^63.
pub fn v3_pow2_plus1(f: u64) -> u32 {
    let mut modulus = 1u64;
    let mut e = 0;
    while e < 39 {
        modulus *= 3;
        if !(pow_mod(2, f, modulus) + 1).is_multiple_of(modulus) {
            break;
        }
        e += 1;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(v3(9), 2);
        assert_eq!(v3(1), 0);
        assert_eq!(v3(513), 3);
        assert_eq!(513, 27 * 19);
        assert_eq!(v3_pow2_plus1(9), 3);
        assert_eq!(v3_pow2_plus1(9), v3(9) + 1);
    }

    #[test]
    fn order_examples() {
        assert_eq!(ord(9, 2).unwrap(), 6);
        assert_eq!(ord(7, 2).unwrap(), 3);
        assert_eq!(ord(1, 5).unwrap(), 1);
        assert_eq!(ord(9, 3), Err(Error::NotCoprime { n: 9, a: 3 }));
    }

    #[test]
    fn modular_valuation_matches_direct_for_small_f() {
        for f in 0..63u64 {
            assert_eq!(v3_pow2_plus1(f), v3((1u64 << f) + 1), "f={f}");
        }
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(1023, 11), 11);
        assert_eq!(gcd(63, 3), 3);
        assert_eq!(gcd(0, 5), 5);
    }
}
