//! Chebyshev identities and the solid torus and `S^1 x S^2` skein modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use skein_core::chebyshev::{chebyshev_a, chebyshev_reduce, chebyshev_s, chebyshev_t, Polynomial};
use skein_core::sample;
use skein_core::torus_skein::{a_basis_expand, s1s2_frobenius_matrix, s1s2_reduce};

use super::Params;
use crate::runner::{ensure, Check};

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

pub fn chebyshev_checks(p: &Params) -> Vec<Check> {
    let (n, trials) = (p.n as usize, p.trials);
    vec![
        Check::new("first-minus-second-kind", |_| {
            for m in 2..=12 {
                ensure(chebyshev_t(m) == &chebyshev_s(m) - &chebyshev_s(m - 2), || format!("n={m}"))?;
            }
            Ok("T_n = S_n - S_{n-2} for 2 <= n <= 12".into())
        }),
        Check::new("composition-multiplies-indices", |_| {
            for a in 1..=6 {
                for b in 1..=6 {
                    ensure(chebyshev_t(a).compose(&chebyshev_t(b)) == chebyshev_t(a * b), || format!("T_{a} o T_{b}"))?;
                }
            }
            Ok("T_m o T_n = T_mn for m, n <= 6".into())
        }),
        Check::new("first-kind-closed-form", move |rng| {
            for _ in 0..trials {
                let m = rng.random_range(0..=30usize);
                let t = BigRational::new(rng.random_range(1..=9i64).into(), rng.random_range(1..=9i64).into());
                let x = &t + &t.recip();
                let tm = num_traits::pow(t.clone(), m);
                ensure(chebyshev_t(m).eval(&x) == &tm + &tm.recip(), || format!("T_{m} at t = {t}"))?;
            }
            Ok(format!("T_n(t + 1/t) = t^n + t^-n at {trials} rational points"))
        }),
        Check::new("reduce-round-trip", move |rng| {
            for _ in 0..trials {
                let poly = sample::polynomial(rng, 5 * n);
                let form = chebyshev_reduce(&poly, n)?;
                ensure(form.resubstitute() == poly, || format!("{poly}"))?;
            }
            Ok(format!("{trials} polynomials of degree <= {}", 5 * n))
        }),
        Check::new("a-family-unitriangular", |_| {
            for m in 1..=20 {
                let a = chebyshev_a(m)?;
                ensure(a.is_monic() && a.degree() == Some(m), || format!("A_{m}"))?;
            }
            Ok("A_n monic of degree n for n <= 20".into())
        }),
    ]
}

pub fn torus_skein_checks(p: &Params) -> Vec<Check> {
    let (n, kmax) = (p.n as usize, p.kmax);
    let top = (kmax * n).max(20);
    vec![
        Check::new("a-basis-unitriangular", move |_| {
            for m in 1..=top {
                let coords = a_basis_expand(&Polynomial::monomial(m, rat(1)));
                ensure(coords.len() == m + 1 && coords[m] == rat(1), || format!("x^{m}"))?;
            }
            Ok(format!("x^m has leading A-coordinate 1 for m <= {top}"))
        }),
        Check::new("s1s2-kill-rule", move |_| {
            for i in 1..=top {
                let img = s1s2_reduce(&chebyshev_a(i)?, n)?;
                let survives = (i + 2) % n == 0;
                ensure(survives != img.is_zero(), || format!("A_{i}"))?;
            }
            Ok(format!("A_i survives iff N | i + 2, for i <= {top}"))
        }),
        Check::new("s1s2-first-kind-images", move |_| {
            for k in 1..=kmax {
                let img = s1s2_reduce(&chebyshev_t(k * n), n)?;
                let ok = img.empty == rat(0) && img.e.len() == 1 && img.coeff(k * n - 2) == rat(-2);
                ensure(ok, || format!("T_{} reduces to {img:?}", k * n))?;
            }
            Ok(format!("T_kN -> -2 e_(kN-2) for k <= {kmax}"))
        }),
        Check::new("s1s2-frobenius-invertible", move |_| {
            let m = s1s2_frobenius_matrix(n, kmax)?;
            ensure(m.has_expected_shape(), || "matrix is not diag(2, -2, ..., -2)".into())?;
            let det = m.determinant();
            ensure(m.is_invertible(), || "determinant vanishes".into())?;
            Ok(format!("Frobenius matrix invertible, {0}x{0}, determinant {det}", kmax + 1))
        }),
    ]
}
