use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use skein_core::chebyshev::{chebyshev_a, chebyshev_reduce, chebyshev_s, chebyshev_t, Polynomial};

fn polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 1..=max_degree + 1).prop_map(|c| Polynomial::from_ints(&c))
}

/// `T_n(2 cos θ) = 2 cos(nθ)`, evaluated exactly at `x = 2` and `x = -2` and
/// through the closed form `T_n(t + 1/t) = t^n + t^{-n}` at rational `t`.
fn first_kind_at(n: usize, t: &BigRational) -> BigRational {
    let tn = num_traits::pow(t.clone(), n);
    &tn + &(BigRational::from_integer(1.into()) / &tn)
}

proptest! {
    #[test]
    fn first_kind_closed_form(n in 0usize..25, num in 1i64..6, den in 1i64..6) {
        let t = BigRational::new(BigInt::from(num), BigInt::from(den));
        let x = &t + &(BigRational::from_integer(1.into()) / &t);
        prop_assert_eq!(chebyshev_t(n).eval(&x), first_kind_at(n, &t));
    }

    #[test]
    fn reduce_round_trip(n in prop::sample::select(vec![1usize, 3, 5, 7]), p in polynomial(35)) {
        let form = chebyshev_reduce(&p, n).unwrap();
        prop_assert_eq!(form.cols().len(), n);
        prop_assert_eq!(form.resubstitute(), p);
    }

    #[test]
    fn composition_is_associative(p in polynomial(4), q in polynomial(3), r in polynomial(3)) {
        prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
    }
}

#[test]
fn first_minus_second_kind() {
    for n in 2..=12 {
        assert_eq!(chebyshev_t(n), &chebyshev_s(n) - &chebyshev_s(n - 2));
    }
}

#[test]
fn composition_multiplies_indices() {
    for m in 1..=6 {
        for n in 1..=6 {
            assert_eq!(chebyshev_t(m).compose(&chebyshev_t(n)), chebyshev_t(m * n));
        }
    }
}

#[test]
fn first_kind_is_monic() {
    for n in [1usize, 3, 5, 7, 9, 11] {
        assert!(chebyshev_t(n).is_monic());
        assert_eq!(chebyshev_t(n).degree(), Some(n));
    }
}

#[test]
fn a_family_is_unitriangular() {
    for n in 1..=20 {
        let a = chebyshev_a(n).unwrap();
        assert!(a.is_monic(), "A_{n}");
        assert_eq!(a.degree(), Some(n));
    }
}

#[test]
fn solid_torus_is_free_of_rank_n() {
    // Every x^m lies in the span of {x^j T_N^k : j < N}, with the x^j column
    // carrying exactly the residue class of m at the top.
    for n in [3usize, 5] {
        for m in 0..=6 * n {
            let form = chebyshev_reduce(&Polynomial::monomial(m, BigRational::from_integer(1.into())), n).unwrap();
            let j = m % n;
            assert_eq!(form.cols()[j].degree(), Some(m / n), "x^{m} at N={n}");
            for (i, c) in form.cols().iter().enumerate() {
                if let Some(d) = c.degree() {
                    assert!(d * n + i <= m);
                }
            }
        }
    }
}
