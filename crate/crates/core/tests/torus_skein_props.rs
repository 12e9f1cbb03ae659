use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use skein_core::chebyshev::{chebyshev_a, chebyshev_t, Polynomial};
use skein_core::torus_skein::{a_basis_expand, a_basis_resum, s1s2_frobenius_matrix, s1s2_reduce, torus_frobenius};

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-5i64..=5, 1..=max_degree + 1).prop_map(|c| Polynomial::from_ints(&c))
}

proptest! {
    #[test]
    fn a_basis_round_trip(p in polynomial(24)) {
        prop_assert_eq!(a_basis_resum(&a_basis_expand(&p)), p);
    }

    #[test]
    fn reduction_is_linear(n in prop::sample::select(vec![3usize, 5, 7]), p in polynomial(20), q in polynomial(20), c in -4i64..=4) {
        let lhs = s1s2_reduce(&(&p + &q.scale(&rat(c))), n).unwrap();
        let (rp, rq) = (s1s2_reduce(&p, n).unwrap(), s1s2_reduce(&q, n).unwrap());
        prop_assert_eq!(&lhs.empty, &(&rp.empty + &(&rq.empty * &rat(c))));
        for i in 1..=20 {
            prop_assert_eq!(lhs.coeff(i), &rp.coeff(i) + &(&rq.coeff(i) * &rat(c)));
        }
    }

    #[test]
    fn frobenius_is_an_algebra_map(n in prop::sample::select(vec![1usize, 3, 5]), p in polynomial(4), q in polynomial(4)) {
        prop_assert_eq!(torus_frobenius(&(&p * &q), n), &torus_frobenius(&p, n) * &torus_frobenius(&q, n));
    }
}

#[test]
fn a_family_is_unitriangular_in_x() {
    for n in 1..=20 {
        let a = chebyshev_a(n).unwrap();
        assert!(a.is_monic());
        assert_eq!(a.degree(), Some(n));
        let coords = a_basis_expand(&a);
        for (i, c) in coords.iter().enumerate() {
            assert_eq!(*c, if i == n { rat(1) } else { rat(0) }, "A_{n} slot {i}");
        }
    }
}

#[test]
fn kill_rule_on_the_a_basis() {
    for n in [3usize, 5, 7] {
        for i in 1..=5 * n {
            let img = s1s2_reduce(&chebyshev_a(i).unwrap(), n).unwrap();
            assert!(img.empty.is_zero());
            if (i + 2) % n == 0 {
                assert_eq!(img.e.len(), 1);
                assert_eq!(img.coeff(i), rat(1));
            } else {
                assert!(img.is_zero(), "A_{i} survives at N={n}");
            }
        }
    }
}

#[test]
fn constants_survive() {
    let img = s1s2_reduce(&Polynomial::constant(rat(7)), 5).unwrap();
    assert_eq!(img.empty, rat(7));
    assert!(img.e.is_empty());
}

#[test]
fn first_kind_images() {
    for n in [3usize, 5] {
        for k in 1..=6 {
            let img = s1s2_reduce(&chebyshev_t(k * n), n).unwrap();
            assert!(img.empty.is_zero());
            assert_eq!(img.e.len(), 1);
            assert_eq!(img.coeff(k * n - 2), rat(-2));
        }
    }
}

#[test]
fn frobenius_matrix_is_invertible() {
    for n in [3usize, 5] {
        for kmax in 1..=6 {
            let m = s1s2_frobenius_matrix(n, kmax).unwrap();
            assert!(m.has_expected_shape());
            assert!(m.is_invertible());
            assert_eq!(m.determinant(), rat(2) * num_traits::pow(rat(-2), kmax));
        }
    }
}

#[test]
fn frobenius_matrix_rejects_bad_input() {
    assert!(s1s2_frobenius_matrix(1, 3).is_err());
    assert!(s1s2_frobenius_matrix(4, 3).is_err());
    assert!(s1s2_frobenius_matrix(3, 0).is_err());
    assert!(s1s2_reduce(&Polynomial::x(), 2).is_err());
}
