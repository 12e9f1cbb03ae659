use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skein_core::oq_sl2::rewrite::{monomial_by_rewriting, normal_form_combination};
use skein_core::oq_sl2::{
    b_set, d_set, express_in_db, frobenius_generator_image, in_b, in_d, independence_certificate, is_in_e,
    localized_express, normal_form, normal_form_with, phi, psi, tensor_independence_certificate, verify_db_expression,
    Generator, GeneratorWord, OqElement, PbwIndex, Strategy as Rewrite, TensorElement, TopCoefficient,
};
use skein_core::sample;
use skein_core::scalars::ScalarRing;

fn rou(n: i64) -> ScalarRing {
    ScalarRing::root_of_unity(n).unwrap()
}

fn lambda(max: u32) -> impl Strategy<Value = PbwIndex> {
    (0..=max, 0..=max, 0..=max, 0..=max, any::<bool>())
        .prop_map(|(a, d, b, c, keep_a)| if keep_a { PbwIndex::new(a, 0, b, c) } else { PbwIndex::new(0, d, b, c) })
}

fn quadruple(max: u32) -> impl Strategy<Value = PbwIndex> {
    (0..=max, 0..=max, 0..=max, 0..=max).prop_map(|(a, d, b, c)| PbwIndex::new(a, d, b, c))
}

fn word(max_len: usize) -> impl Strategy<Value = GeneratorWord> {
    prop::collection::vec(prop::sample::select(Generator::ALL.to_vec()), 0..=max_len).prop_map(GeneratorWord)
}

fn ring_choice() -> impl Strategy<Value = ScalarRing> {
    prop::sample::select(vec![0i64, 3, 5]).prop_map(|n| if n == 0 { ScalarRing::generic() } else { rou(n) })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn closed_form_product_matches_rewriting(ring in ring_choice(), k in lambda(3), m in lambda(3)) {
        let lhs = &OqElement::basis(&ring, k).unwrap() * &OqElement::basis(&ring, m).unwrap();
        let w = GeneratorWord::from_index(k).concat(&GeneratorWord::from_index(m));
        prop_assert_eq!(lhs, normal_form(&ring, &w));
    }

    #[test]
    fn product_of_words_is_product_of_normal_forms(ring in ring_choice(), u in word(5), v in word(5)) {
        let lhs = normal_form(&ring, &u.concat(&v));
        prop_assert_eq!(lhs, &normal_form(&ring, &u) * &normal_form(&ring, &v));
    }

    #[test]
    fn product_is_associative(ring in ring_choice(), x in word(4), y in word(4), z in word(4)) {
        let (x, y, z) = (normal_form(&ring, &x), normal_form(&ring, &y), normal_form(&ring, &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn monomial_matches_rewriting(ring in ring_choice(), k in quadruple(4)) {
        prop_assert_eq!(OqElement::monomial(&ring, k), monomial_by_rewriting(&ring, k));
    }

    #[test]
    fn degree_formula_generic(k in quadruple(6)) {
        let g = ScalarRing::generic();
        prop_assert_eq!(monomial_by_rewriting(&g, k).deg().unwrap(), phi(k));
    }

    #[test]
    fn phi_lands_in_lambda(k in quadruple(20)) {
        prop_assert!(phi(k).in_lambda());
    }

    #[test]
    fn conjugating_e_by_d(t in 1u32..6, s in -6i64..6, mid in prop::collection::vec(-3i64..=3, 5)) {
        let g = ScalarRing::generic();
        let mut f = vec![(PbwIndex::ZERO, g.one()), (PbwIndex::new(0, 0, t, t), g.q_power(s))];
        for i in 1..t {
            f.push((PbwIndex::new(0, 0, i, i), g.from_integer(mid[i as usize - 1])));
        }
        let f = OqElement::from_terms(&g, f).unwrap();
        prop_assert!(is_in_e(&f, t, TopCoefficient::Strict));
        // d (bc)^i = q^{4i} (bc)^i d
        let shifted = OqElement::from_terms(
            &g,
            f.terms().map(|(k, c)| (*k, c * &g.q_power(4 * k.b as i64))),
        ).unwrap();
        prop_assert!(is_in_e(&shifted, t, TopCoefficient::Strict));
        let d = OqElement::basis(&g, PbwIndex::new(0, 1, 0, 0)).unwrap();
        prop_assert_eq!(&d * &f, &shifted * &d);
    }

    #[test]
    fn localized_expansion_at_five(m in lambda(10)) {
        let r = rou(5);
        let e = localized_express(&r, m).unwrap();
        prop_assert!(e.s <= 1);
        prop_assert!(e.verify(&r, m).unwrap());
    }

    #[test]
    fn db_expansion_at_five(m in lambda(10)) {
        let r = rou(5);
        let e = express_in_db(&r, m).unwrap();
        prop_assert!(verify_db_expression(&r, m, &e).unwrap());
    }

    #[test]
    fn distinct_degrees_never_cancel(seed in any::<u64>()) {
        let r = rou(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut by_degree = BTreeMap::new();
        for _ in 0..6 {
            let x = sample::aq_element(&r, &mut rng, 3, 3);
            let y = &x * &OqElement::basis(&r, sample::lambda_index(&mut rng, 2)).unwrap();
            by_degree.entry(y.deg().unwrap()).or_insert(y);
        }
        let top = *by_degree.keys().next_back().unwrap();
        let sum = by_degree.values().fold(OqElement::zero(&r), |acc, y| &acc + y);
        prop_assert_eq!(sum.deg().unwrap(), top);
    }
}

#[test]
fn rewriting_is_confluent() {
    let g = ScalarRing::generic();
    for len in 0..=6 {
        for w in GeneratorWord::all_of_length(len) {
            let left = normal_form_with(&g, &w, Rewrite::Leftmost);
            let right = normal_form_with(&g, &w, Rewrite::Rightmost);
            assert_eq!(left, right, "word {w}");
        }
    }
}

#[test]
fn combination_normal_form_is_linear() {
    let g = ScalarRing::generic();
    let u: GeneratorWord = "dacb".parse().unwrap();
    let v: GeneratorWord = "bd".parse().unwrap();
    let combo = normal_form_combination(&g, [(g.from_integer(2), u.clone()), (g.q_power(1), v.clone())], Rewrite::Leftmost);
    let expected = &normal_form(&g, &u).scale(&g.from_integer(2)) + &normal_form(&g, &v).scale(&g.q_power(1));
    assert_eq!(combo, expected);
}

#[test]
fn determinant_relations_hold() {
    for ring in [ScalarRing::generic(), rou(3), rou(7)] {
        let gen = |s: &str| normal_form(&ring, &s.parse().unwrap());
        let one = OqElement::one(&ring);
        assert_eq!(&gen("ad") - &gen("bc").scale(&ring.q_power(-2)), one);
        assert_eq!(&gen("da") - &gen("cb").scale(&ring.q_power(2)), one);
        assert_eq!(gen("ca"), gen("ac").scale(&ring.q_power(2)));
        assert_eq!(gen("db"), gen("bd").scale(&ring.q_power(2)));
        assert_eq!(gen("bc"), gen("cb"));
    }
}

#[test]
fn frobenius_images_commute() {
    for n in [3i64, 5, 7] {
        let r = rou(n);
        let imgs: Vec<OqElement> = Generator::ALL.iter().map(|g| frobenius_generator_image(&r, *g).unwrap()).collect();
        for x in &imgs {
            for y in &imgs {
                assert_eq!(x * y, y * x);
            }
        }
    }
}

#[test]
fn frobenius_images_are_central() {
    for n in [3i64, 5] {
        let r = rou(n);
        for g in Generator::ALL {
            let img = frobenius_generator_image(&r, g).unwrap();
            for h in Generator::ALL {
                let y = OqElement::basis(&r, h.index()).unwrap();
                assert_eq!(&img * &y, &y * &img, "N={n}: {g:?}^N vs {h:?}");
            }
        }
    }
}

#[test]
fn diagonal_powers_lie_in_e() {
    for ring in [ScalarRing::generic(), rou(3), rou(5), rou(9)] {
        for t in 0..=10 {
            let x = normal_form(&ring, &GeneratorWord::from_index(PbwIndex::new(t, t, 0, 0)));
            assert!(is_in_e(&x, t, TopCoefficient::Strict), "t = {t}");
        }
    }
}

#[test]
fn difference_determines_lambda_pair() {
    // Only the first two coordinates enter the statement.
    let top = 9i64;
    let pairs: Vec<(i64, i64)> = (0..=top).flat_map(|a| [(a, 0), (0, a)]).collect::<BTreeSet<_>>().into_iter().collect();
    for &(u1, u2) in &pairs {
        for &(v1, v2) in &pairs {
            if u1 - u2 == v1 - v2 {
                assert_eq!((u1, u2), (v1, v2));
            }
        }
    }
}

#[test]
fn psi_is_injective() {
    for n in [3u32, 5] {
        let mut seen = BTreeSet::new();
        for a in 0..=2 {
            for d in 0..=2 {
                for b in 0..=2 {
                    for c in 0..=2 {
                        let u = PbwIndex::new(a, d, b, c);
                        if !u.in_lambda() {
                            continue;
                        }
                        for v in d_set(n) {
                            assert!(seen.insert(psi(n, u, v).unwrap()), "N={n}: {u} {v}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn psi_fixes_the_box() {
    for n in [3u32, 5] {
        for v in d_set(n) {
            assert_eq!(psi(n, PbwIndex::ZERO, v).unwrap(), v);
        }
    }
}

#[test]
fn b_set_is_the_comprehension() {
    // Brute force over a box that strictly contains B.
    for n in [1u32, 3, 5, 7] {
        let mut brute = BTreeSet::new();
        for a in 0..=n {
            for d in 0..=n {
                for b in 0..=n {
                    for c in 0..=n {
                        let k = PbwIndex::new(a, d, b, c);
                        if in_b(k, n) {
                            brute.insert(k);
                        }
                    }
                }
            }
        }
        assert_eq!(brute, b_set(n).into_iter().collect::<BTreeSet<_>>());
        assert!(brute.iter().all(|k| !in_d(*k, n)));
    }
}

#[test]
fn independence_over_random_maps_at_five() {
    let r = rou(5);
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for _ in 0..20 {
        let map = sample::d_coefficient_map(&r, &mut rng);
        assert!(independence_certificate(&r, &map).unwrap().is_certified());
    }
}

#[test]
fn tensor_square_independence() {
    let r = rou(3);
    let box_d = d_set(3);
    for seed in 0..2u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut coeffs = BTreeMap::new();
        for x in &box_d {
            for y in &box_d {
                let c = TensorElement::pure(
                    &r,
                    &[sample::aq_element(&r, &mut rng, 2, 2), sample::aq_element(&r, &mut rng, 2, 2)],
                );
                coeffs.insert(vec![*x, *y], c);
            }
        }
        assert_eq!(coeffs.len(), 729);
        assert!(tensor_independence_certificate(&r, 2, &coeffs).unwrap().is_certified());
    }
}
