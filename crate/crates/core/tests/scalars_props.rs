use num_bigint::BigInt;
use proptest::prelude::*;

use skein_core::scalars::{cyclotomic_polynomial, ScalarRing};

fn odd_order() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![1i64, 3, 5, 7, 9, 11, 15])
}

fn scalar(ring: &ScalarRing, coeffs: &[i64]) -> skein_core::scalars::Scalar {
    coeffs
        .iter()
        .enumerate()
        .fold(ring.zero(), |acc, (i, c)| &acc + &(&ring.from_integer(*c) * &ring.q_half_power(i as i64)))
}

proptest! {
    #[test]
    fn half_powers_are_inverse(n in odd_order(), m in -60i64..60) {
        let r = ScalarRing::root_of_unity(n).unwrap();
        prop_assert!((&r.q_half_power(m) * &r.q_half_power(-m)).is_one());
        let g = ScalarRing::generic();
        prop_assert!((&g.q_half_power(m) * &g.q_half_power(-m)).is_one());
    }

    #[test]
    fn q_power_is_one_iff_divisible(n in odd_order(), m in -40i64..40) {
        let r = ScalarRing::root_of_unity(n).unwrap();
        prop_assert_eq!(r.q_power(m).is_one(), m % n == 0);
    }

    #[test]
    fn nu_squared_is_one(n in odd_order()) {
        let r = ScalarRing::root_of_unity(n).unwrap();
        prop_assert!(r.q_half_power(2 * n * n).is_one());
    }

    #[test]
    fn nonzero_elements_invert(n in prop::sample::select(vec![3i64, 5, 7, 9]), coeffs in prop::collection::vec(-4i64..=4, 1..6)) {
        let r = ScalarRing::root_of_unity(n).unwrap();
        let x = scalar(&r, &coeffs);
        if x.is_zero() {
            prop_assert!(x.inv().is_err());
        } else {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn field_axioms(
        n in prop::sample::select(vec![3i64, 5, 9]),
        a in prop::collection::vec(-3i64..=3, 1..5),
        b in prop::collection::vec(-3i64..=3, 1..5),
        c in prop::collection::vec(-3i64..=3, 1..5),
    ) {
        let r = ScalarRing::root_of_unity(n).unwrap();
        let (x, y, z) = (scalar(&r, &a), scalar(&r, &b), scalar(&r, &c));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert!((&x - &x).is_zero());
    }
}

#[test]
fn cyclotomic_degrees_match_totient() {
    let totient = |n: u32| (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count();
    for n in [1u32, 3, 5, 7, 9, 15, 21] {
        let phi = cyclotomic_polynomial(n);
        assert_eq!(phi.len() - 1, totient(n), "n = {n}");
        assert_eq!(phi.last(), Some(&BigInt::from(1)));
    }
}

#[test]
fn primitive_generator() {
    for n in [3i64, 5, 7, 9] {
        let r = ScalarRing::root_of_unity(n).unwrap();
        for m in 1..n {
            assert!(!r.q_half_power(m).is_one(), "zeta^{m} = 1 at N = {n}");
        }
        assert!(r.q_half_power(n).is_one());
    }
    assert!(ScalarRing::root_of_unity(4).is_err());
    assert!(ScalarRing::root_of_unity(0).is_err());
    assert!(ScalarRing::root_of_unity(-3).is_err());
}
