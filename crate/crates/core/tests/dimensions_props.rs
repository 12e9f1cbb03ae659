use num_bigint::BigUint;
use proptest::prelude::*;

use skein_core::dimensions::{
    db_count_formula, k_dimension, lambda_bounds, module_bound, r_of_surface, Marked3ManifoldDescriptor,
    SurfaceDescriptor,
};
use skein_core::oq_sl2::{b_set, count_d, count_db, d_set};
use skein_core::Error;

fn odd() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![1u32, 3, 5, 7, 9, 11])
}

fn manifold(genus: u32, markings: u32) -> Marked3ManifoldDescriptor {
    Marked3ManifoldDescriptor { genus, markings }
}

proptest! {
    #[test]
    fn k_dimension_meets_lower_bound(n in odd(), genus in 0u32..4, punctures in 0u32..4, boundary in 0u32..3) {
        let s = SurfaceDescriptor::new(genus, punctures, boundary);
        match (k_dimension(&s, n), lambda_bounds(&s, n)) {
            (Ok(k), Ok((lo, hi))) => {
                prop_assert!(lo <= hi);
                if boundary > 0 || punctures > 0 {
                    prop_assert_eq!(k, lo);
                }
            }
            (Err(_), Err(_)) => {}
            (Ok(_), Err(Error::UnsupportedDescriptor(_))) => prop_assert!(punctures == 0 && boundary == 0),
            (k, b) => prop_assert!(false, "inconsistent: {k:?} vs {b:?}"),
        }
    }

    #[test]
    fn bound_grows_with_genus(n in odd(), genus in 0u32..6, markings in 0u32..4) {
        let lo = module_bound(&manifold(genus, markings), n).unwrap();
        let hi = module_bound(&manifold(genus + 1, markings), n).unwrap();
        prop_assert!(lo <= hi);
    }

    #[test]
    fn bound_grows_with_markings(n in odd(), genus in 0u32..6, markings in 1u32..4) {
        let lo = module_bound(&manifold(genus, markings), n).unwrap();
        let hi = module_bound(&manifold(genus, markings + 1), n).unwrap();
        prop_assert!(lo <= hi);
    }

    #[test]
    fn first_marking_helps_at_small_genus(n in odd(), genus in 0u32..6) {
        let lo = module_bound(&manifold(genus, 0), n).unwrap();
        let hi = module_bound(&manifold(genus, 1), n).unwrap();
        prop_assert!(lo <= hi);
    }

    #[test]
    fn r_counts_boundary_arcs(genus in 0u32..5, punctures in 0u32..5, boundary in 1u32..4) {
        let s = SurfaceDescriptor::new(genus, punctures, boundary);
        let t = SurfaceDescriptor::new(genus, punctures, boundary + 1);
        prop_assert_eq!(r_of_surface(&t), r_of_surface(&s) + 1);
    }
}

#[test]
fn count_formula_matches_enumeration() {
    for n in [1u32, 3, 5, 7, 9] {
        let enumerated = d_set(n).len() + b_set(n).len();
        assert_eq!(enumerated, count_db(n));
        assert_eq!(db_count_formula(n).unwrap(), BigUint::from(enumerated));
        assert_eq!(count_d(n), (n as usize).pow(3));
    }
}

#[test]
fn bigon_dimension_is_the_box() {
    for n in [1u32, 3, 5, 7] {
        assert_eq!(k_dimension(&SurfaceDescriptor::bigon(), n).unwrap(), BigUint::from(count_d(n)));
    }
}

#[test]
fn first_marking_can_lose_at_large_genus() {
    // 3^63 exceeds 40^12.
    let none = module_bound(&manifold(6, 0), 3).unwrap();
    let one = module_bound(&manifold(6, 1), 3).unwrap();
    assert!(none > one);
}

#[test]
fn oversized_exponents_are_refused() {
    assert!(matches!(module_bound(&manifold(30, 0), 3), Err(Error::CountTooLarge(_))));
    assert!(matches!(lambda_bounds(&SurfaceDescriptor::closed(20, 0), 3), Err(Error::CountTooLarge(_))));
}

#[test]
fn even_orders_are_refused() {
    assert!(matches!(k_dimension(&SurfaceDescriptor::bigon(), 2), Err(Error::InvalidOrder(2))));
    assert!(matches!(db_count_formula(0), Err(Error::InvalidOrder(0))));
}

#[test]
fn boundary_circle_counts_are_validated() {
    assert!(SurfaceDescriptor::with_boundary_circles(0, 0, 2, 3).is_err());
    assert!(SurfaceDescriptor::with_boundary_circles(0, 0, 2, 0).is_err());
    let s = SurfaceDescriptor::with_boundary_circles(0, 0, 2, 2).unwrap();
    assert!(k_dimension(&s, 3).is_ok());
}
