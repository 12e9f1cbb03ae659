//! Checks on the quantum torus of each triangulation.

use std::collections::BTreeMap;

use skein_core::quantum_torus::{
    balanced_check, balanced_z_basis, center_free_expansion_certificate, central_h, frobenius_qt, puncture_exponent,
    qt_deg, sigma_from_fans, QuantumTorus, Triangulation,
};
use skein_core::sample;
use skein_core::scalars::ScalarRing;
use skein_core::Certificate;

use super::Params;
use crate::runner::{ensure, Check, Failure};

fn target(t: &Triangulation, n: u32) -> Result<QuantumTorus, Failure> {
    let ring = ScalarRing::root_of_unity(n as i64)?;
    Ok(QuantumTorus::new(&ring, sigma_from_fans(t), 1))
}

/// All `p`-tuples with entries in `0..n`.
fn exponent_box(p: usize, n: u32) -> Vec<Vec<i64>> {
    (0..p).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|k| {
                (0..n as i64).map(move |x| {
                    let mut k = k.clone();
                    k.push(x);
                    k
                })
            })
            .collect()
    })
}

pub fn checks(p: &Params) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, tri) in &p.triangulations {
        out.extend(for_triangulation(name, tri, p));
    }
    out
}

fn for_triangulation(name: &str, tri: &Triangulation, p: &Params) -> Vec<Check> {
    let (n, trials) = (p.n, p.trials);
    let id = |s: &str| format!("{name}/{s}");
    let t1 = tri.clone();
    let t2 = tri.clone();
    let t3 = tri.clone();
    let t4 = tri.clone();
    let t5 = tri.clone();
    let t6 = tri.clone();
    vec![
        Check::new(id("sigma-well-formed"), move |_| {
            let s = sigma_from_fans(&t1);
            ensure(s.is_antisymmetric(), || "sigma is not antisymmetric".into())?;
            ensure(s.entries_in_range(), || "sigma has an entry outside [-2, 2]".into())?;
            Ok(format!("{0}x{0} antisymmetric, entries in [-2, 2]", s.size()))
        }),
        Check::new(id("puncture-loops-central"), move |_| {
            let mut pairs = 0;
            for ring in [ScalarRing::root_of_unity(n as i64)?, ScalarRing::generic()] {
                let torus = QuantumTorus::new(&ring, sigma_from_fans(&t2), 1);
                for v in t2.puncture_names() {
                    let h = central_h(&torus, &t2, v)?;
                    for i in 0..t2.edge_count() {
                        let y = torus.generator(i);
                        ensure(&h * &y == &y * &h, || format!("H_{v} and Y_{i}"))?;
                        pairs += 1;
                    }
                }
            }
            Ok(format!("{pairs} commutations exact"))
        }),
        Check::new(id("z-basis-unimodular"), move |_| {
            let zb = balanced_z_basis(&t3)?;
            ensure(zb.change_determinant().abs() == 1, || "completion is not unimodular".into())?;
            for (i, v) in t3.puncture_names().enumerate() {
                let h = puncture_exponent(&t3, v)?;
                ensure(zb.vectors()[i] == h, || format!("Z_{i} differs from H_{v}"))?;
            }
            ensure(zb.vectors().iter().all(|z| balanced_check(z, &t3)), || "unbalanced basis vector".into())?;
            Ok(format!("{} vectors, first {} are the puncture loops", zb.vectors().len(), zb.puncture_count()))
        }),
        Check::new(id("frobenius-multiplicative"), move |rng| {
            let zb = balanced_z_basis(&t4)?;
            let tgt = target(&t4, n)?;
            let src = tgt.frobenius_source(n);
            for _ in 0..trials {
                let a = sample::balanced_element(&src, &zb, rng, 3, 2);
                let b = sample::balanced_element(&src, &zb, rng, 3, 2);
                let ab = &a * &b;
                let lhs = frobenius_qt(&ab, &tgt, n)?;
                let rhs = &frobenius_qt(&a, &tgt, n)? * &frobenius_qt(&b, &tgt, n)?;
                ensure(lhs == rhs, || format!("F(a * b) differs for a = {a:?}, b = {b:?}"))?;
            }
            Ok(format!("{trials} random balanced pairs"))
        }),
        Check::new(id("degree-additive"), move |rng| {
            let zb = balanced_z_basis(&t5)?;
            let tgt = target(&t5, n)?;
            for _ in 0..trials {
                let a = sample::balanced_element(&tgt, &zb, rng, 3, 2);
                let b = sample::balanced_element(&tgt, &zb, rng, 3, 2);
                let sum: Vec<i64> = qt_deg(&a, &zb)?.iter().zip(qt_deg(&b, &zb)?).map(|(x, y)| x + y).collect();
                let got = qt_deg(&(&a * &b), &zb)?;
                ensure(got == sum, || format!("deg of product {got:?}, expected {sum:?}"))?;
            }
            Ok(format!("{trials} random nonzero pairs"))
        }),
        Check::new(id("center-free-certificate"), move |rng| {
            let zb = balanced_z_basis(&t6)?;
            let tgt = target(&t6, n)?;
            let src = tgt.frobenius_source(n);
            let ks = exponent_box(zb.puncture_count(), n);
            for t in 0..trials {
                let elements: BTreeMap<Vec<i64>, _> = ks
                    .iter()
                    .map(|k| (k.clone(), sample::balanced_element(&src, &zb, rng, 2, 2)))
                    .collect();
                if let Certificate::Refuted { reason } = center_free_expansion_certificate(&tgt, &zb, n, &elements)? {
                    return Err(Failure::Fail(format!("trial {t}: {reason}")));
                }
            }
            Ok(format!("{trials} random families of {} elements certified", ks.len()))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_box_size() {
        assert_eq!(exponent_box(0, 3), vec![Vec::<i64>::new()]);
        assert_eq!(exponent_box(2, 3).len(), 9);
        assert_eq!(exponent_box(1, 3), vec![vec![0], vec![1], vec![2]]);
    }
}
