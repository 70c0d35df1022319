use num_bigint::BigUint;
use tricorr::arith::{ord, v3, v3_pow2_plus1};

fn v3_big(mut n: BigUint) -> u32 {
    let three = BigUint::from(3u32);
    let zero = BigUint::from(0u32);
    let mut count = 0;
    while &n % &three == zero {
        n /= &three;
        count += 1;
    }
    count
}

#[test]
fn v3_of_two_power_plus_one_matches_bigint() {
    for f in 0..=2000u64 {
        let big = (BigUint::from(1u32) << f) + 1u32;
        assert_eq!(v3_pow2_plus1(f), v3_big(big), "f = {f}");
    }
}

#[test]
fn v3_matches_bigint_on_small_integers() {
    for n in 1..20_000u64 {
        assert_eq!(v3(n), v3_big(BigUint::from(n)), "n = {n}");
    }
}

#[test]
fn order_of_two_matches_bigint_powers() {
    for n in (3..500u64).step_by(2) {
        let e = ord(n, 2).unwrap();
        let modulus = BigUint::from(n);
        assert_eq!(BigUint::from(2u32).modpow(&BigUint::from(e), &modulus), BigUint::from(1u32));
        for s in 1..e {
            assert_ne!(BigUint::from(2u32).modpow(&BigUint::from(s), &modulus), BigUint::from(1u32), "n = {n}, s = {s}");
        }
    }
}
