//! Seeded random inputs for the randomized checks.
//!
//! Every generator draws only from the supplied `Rng`, so a fixed seed
//! reproduces the same inputs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::chebyshev::Polynomial;
use crate::oq_sl2::{d_set, OqElement, PbwIndex};
use crate::quantum_torus::{QTElement, QuantumTorus, ZBasis};
use crate::scalars::{Scalar, ScalarRing};

/// A nonzero scalar with small integer coordinates.
pub fn nonzero_scalar<R: Rng + ?Sized>(ring: &ScalarRing, rng: &mut R) -> Scalar {
    loop {
        let terms = rng.random_range(1..=3);
        let mut s = ring.zero();
        for _ in 0..terms {
            let c = ring.from_integer(rng.random_range(-3..=3));
            s += &(&c * &ring.q_half_power(rng.random_range(-4..=4)));
        }
        if !s.is_zero() {
            return s;
        }
    }
}

/// An index in the PBW index set with entries at most `max_entry`.
pub fn lambda_index<R: Rng + ?Sized>(rng: &mut R, max_entry: u32) -> PbwIndex {
    let mut k = PbwIndex::new(
        rng.random_range(0..=max_entry),
        rng.random_range(0..=max_entry),
        rng.random_range(0..=max_entry),
        rng.random_range(0..=max_entry),
    );
    if rng.random_bool(0.5) {
        k.a = 0;
    } else {
        k.d = 0;
    }
    k
}

/// A nonzero element of `A_q` with at most `max_terms` terms `c O_{N v}`,
/// where the entries of `v` are at most `max_entry`.
pub fn aq_element<R: Rng + ?Sized>(ring: &ScalarRing, rng: &mut R, max_terms: usize, max_entry: u32) -> OqElement {
    let n = ring.order().expect("A_q needs a root of unity");
    loop {
        let terms = rng.random_range(1..=max_terms);
        let pairs: Vec<(PbwIndex, Scalar)> = (0..terms)
            .map(|_| (lambda_index(rng, max_entry).scaled(n), nonzero_scalar(ring, rng)))
            .collect();
        let x = OqElement::from_terms(ring, pairs).expect("indices lie in the PBW index set");
        if !x.is_zero() {
            return x;
        }
    }
}

/// A nonempty map from a random subset of `D` to nonzero `A_q` elements.
pub fn d_coefficient_map<R: Rng + ?Sized>(ring: &ScalarRing, rng: &mut R) -> BTreeMap<PbwIndex, OqElement> {
    let n = ring.order().expect("A_q needs a root of unity");
    let box_d = d_set(n);
    let density = rng.random_range(0.05..=1.0);
    let mut out = BTreeMap::new();
    for k in &box_d {
        if rng.random_bool(density) {
            out.insert(*k, aq_element(ring, rng, 4, 2));
        }
    }
    if out.is_empty() {
        let k = box_d[rng.random_range(0..box_d.len())];
        out.insert(k, aq_element(ring, rng, 4, 2));
    }
    out
}

/// A balanced exponent vector with `Z`-coordinates in `[-bound, bound]`.
pub fn balanced_vector<R: Rng + ?Sized>(zb: &ZBasis, rng: &mut R, bound: i64) -> Vec<i64> {
    let x: Vec<i64> = (0..zb.vectors().len()).map(|_| rng.random_range(-bound..=bound)).collect();
    zb.combine(&x)
}

/// A nonzero balanced element with at most `max_terms` monomials.
pub fn balanced_element<R: Rng + ?Sized>(
    torus: &QuantumTorus,
    zb: &ZBasis,
    rng: &mut R,
    max_terms: usize,
    bound: i64,
) -> QTElement {
    loop {
        let terms = rng.random_range(1..=max_terms);
        let mut x = torus.zero();
        for _ in 0..terms {
            let k = balanced_vector(zb, rng, bound);
            x = &x + &torus.weyl_monomial(&k).scale(&nonzero_scalar(torus.ring(), rng));
        }
        if !x.is_zero() {
            return x;
        }
    }
}

/// A polynomial of degree at most `max_degree` with integer coefficients in `[-5, 5]`.
pub fn polynomial<R: Rng + ?Sized>(rng: &mut R, max_degree: usize) -> Polynomial {
    let deg = rng.random_range(0..=max_degree);
    Polynomial::from_coeffs((0..=deg).map(|_| BigRational::from_integer(BigInt::from(rng.random_range(-5..=5)))))
}
