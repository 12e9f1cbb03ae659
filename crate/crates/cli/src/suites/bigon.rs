//! Checks on `O_q(SL2)` at a fixed odd order.

use std::collections::BTreeSet;

use skein_core::dimensions::db_count_formula;
use skein_core::oq_sl2::{
    count_db, d_set, express_in_db, frobenius_generator_image, independence_certificate, is_in_e, localized_express,
    normal_form, normal_form_with, phi, psi, verify_db_expression, Generator, GeneratorWord, OqElement, PbwIndex,
    Strategy, TopCoefficient,
};
use skein_core::sample;
use skein_core::scalars::ScalarRing;
use skein_core::Certificate;

use super::Params;
use crate::runner::{ensure, Check, Failure};

fn ring(n: u32) -> Result<ScalarRing, Failure> {
    Ok(ScalarRing::root_of_unity(n as i64)?)
}

pub fn checks(p: &Params) -> Vec<Check> {
    let (n, trials, max_exp) = (p.n, p.trials, p.max_exp);
    vec![
        Check::new("pbw-rewriting-confluent", move |_| {
            let r = ring(n)?;
            let mut words = 0;
            for len in 0..=5 {
                for w in GeneratorWord::all_of_length(len) {
                    let left = normal_form_with(&r, &w, Strategy::Leftmost);
                    ensure(left == normal_form_with(&r, &w, Strategy::Rightmost), || format!("word {w}"))?;
                    words += 1;
                }
            }
            Ok(format!("{words} words up to length 5 agree under both strategies"))
        }),
        Check::new("pbw-product-matches-rewriting", move |rng| {
            let r = ring(n)?;
            for _ in 0..trials {
                let (k, m) = (sample::lambda_index(rng, 3), sample::lambda_index(rng, 3));
                let lhs = &OqElement::basis(&r, k)? * &OqElement::basis(&r, m)?;
                let w = GeneratorWord::from_index(k).concat(&GeneratorWord::from_index(m));
                ensure(lhs == normal_form(&r, &w), || format!("O_{k} O_{m}"))?;
            }
            Ok(format!("{trials} random products agree"))
        }),
        Check::new("degree-equals-phi", move |_| {
            let r = ring(n)?;
            let mut total = 0usize;
            for a in 0..=max_exp {
                for d in 0..=max_exp {
                    for b in 0..=max_exp {
                        for c in 0..=max_exp {
                            let k = PbwIndex::new(a, d, b, c);
                            let got = skein_core::oq_sl2::rewrite::monomial_by_rewriting(&r, k).deg()?;
                            ensure(got == phi(k), || format!("{k}: rewriting gives {got}, phi gives {}", phi(k)))?;
                            total += 1;
                        }
                    }
                }
            }
            Ok(format!("{total} monomials with entries <= {max_exp}"))
        }),
        Check::new("diagonal-powers-in-e", move |_| {
            for (label, r) in [(format!("N={n}"), ring(n)?), ("generic".to_string(), ScalarRing::generic())] {
                for t in 0..=10 {
                    let x = normal_form(&r, &GeneratorWord::from_index(PbwIndex::new(t, t, 0, 0)));
                    ensure(is_in_e(&x, t, TopCoefficient::Strict), || format!("{label}: a^{t} d^{t}"))?;
                }
            }
            Ok("a^t d^t in E_t for t <= 10".into())
        }),
        Check::new("d-conjugation-preserves-e", move |_| {
            let r = ring(n)?;
            let d = OqElement::basis(&r, PbwIndex::new(0, 1, 0, 0))?;
            for t in 0..=10 {
                let f = normal_form(&r, &GeneratorWord::from_index(PbwIndex::new(t, t, 0, 0)));
                let g = OqElement::from_terms(&r, f.terms().map(|(k, c)| (*k, c * &r.q_power(4 * k.b as i64))))?;
                ensure(is_in_e(&g, t, TopCoefficient::Strict), || format!("t={t}: conjugate leaves E_t"))?;
                ensure(&d * &f == &g * &d, || format!("t={t}: d f != g d"))?;
            }
            Ok("d f = g d with g in E_t for t <= 10".into())
        }),
        Check::new("lambda-difference-injective", move |_| {
            let top = 3 * n as i64;
            let pairs: BTreeSet<(i64, i64)> = (0..=top).flat_map(|a| [(a, 0), (0, a)]).collect();
            let diffs: BTreeSet<i64> = pairs.iter().map(|(u, v)| u - v).collect();
            ensure(diffs.len() == pairs.len(), || "two pairs share a difference".into())?;
            Ok(format!("{} pairs with entries <= {top}", pairs.len()))
        }),
        Check::new("psi-injective", move |_| {
            let mut seen = BTreeSet::new();
            let box_d = d_set(n);
            for a in 0..=2 {
                for d in 0..=2 {
                    for b in 0..=2 {
                        for c in 0..=2 {
                            let u = PbwIndex::new(a, d, b, c);
                            if !u.in_lambda() {
                                continue;
                            }
                            for v in &box_d {
                                ensure(seen.insert(psi(n, u, *v)?), || format!("collision at ({u}, {v})"))?;
                            }
                        }
                    }
                }
            }
            Ok(format!("{} values distinct", seen.len()))
        }),
        Check::new("box-independence", move |rng| {
            let r = ring(n)?;
            for t in 0..trials {
                let map = sample::d_coefficient_map(&r, rng);
                if let Certificate::Refuted { reason } = independence_certificate(&r, &map)? {
                    return Err(Failure::Fail(format!("trial {t}: {reason}")));
                }
            }
            Ok(format!("{trials} random coefficient maps certified"))
        }),
        Check::new("localized-expansion", move |rng| {
            let r = ring(n)?;
            for _ in 0..trials {
                let m = sample::lambda_index(rng, max_exp);
                let e = localized_express(&r, m)?;
                ensure(e.verify(&r, m)?, || format!("O_{m}"))?;
            }
            Ok(format!("{trials} monomials re-expand exactly"))
        }),
        Check::new("spanning-expansion", move |rng| {
            let r = ring(n)?;
            for _ in 0..trials {
                let m = sample::lambda_index(rng, max_exp);
                let e = express_in_db(&r, m)?;
                ensure(verify_db_expression(&r, m, &e)?, || format!("O_{m}"))?;
            }
            Ok(format!("{trials} monomials re-expand exactly"))
        }),
        Check::new("spanning-count", move |_| {
            let formula = db_count_formula(n)?;
            let counted = count_db(n);
            ensure(formula == counted.into(), || format!("formula {formula} vs enumeration {counted}"))?;
            Ok(format!("formula {formula} = enumeration {counted}"))
        }),
        Check::new("frobenius-images-central", move |_| {
            let r = ring(n)?;
            let mut pairs = 0;
            for g in Generator::ALL {
                let img = frobenius_generator_image(&r, g)?;
                for h in Generator::ALL {
                    let y = OqElement::basis(&r, h.index())?;
                    ensure(&img * &y == &y * &img, || format!("{}^{n} and {}", g.symbol(), h.symbol()))?;
                    pairs += 1;
                }
            }
            Ok(format!("{pairs} generator pairs commute"))
        }),
        Check::new("frobenius-images-commute", move |rng| {
            let r = ring(n)?;
            let imgs = Generator::ALL
                .iter()
                .map(|g| frobenius_generator_image(&r, *g))
                .collect::<Result<Vec<_>, _>>()?;
            for (i, x) in imgs.iter().enumerate() {
                for y in &imgs[i + 1..] {
                    ensure(x * y == y * x, || format!("{x} and {y}"))?;
                }
            }
            let mut sampled = 0;
            for _ in 0..trials.min(20) {
                let x = sample::aq_element(&r, rng, 3, 2);
                let y = sample::aq_element(&r, rng, 3, 2);
                ensure(&x * &y == &y * &x, || format!("{x} and {y}"))?;
                sampled += 1;
            }
            Ok(format!("generator images and {sampled} sampled pairs commute"))
        }),
    ]
}
