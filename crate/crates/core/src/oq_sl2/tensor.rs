//! Tensor powers of `O_q(SL2)` with the componentwise product.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::scalars::{Scalar, ScalarRing};

use super::degree::{in_d, psi};
use super::pbw::{OqElement, PbwIndex};

/// A finite sum of pure tensors `c · O_{k_1} ⊗ ... ⊗ O_{k_r}`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    ring: ScalarRing,
    arity: usize,
    terms: BTreeMap<Vec<PbwIndex>, Scalar>,
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let idx: Vec<String> = k.iter().map(|x| x.to_string()).collect();
                format!("({c})*{}", idx.join("⊗"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl TensorElement {
    pub fn zero(ring: &ScalarRing, arity: usize) -> Self {
        TensorElement {
            ring: ring.clone(),
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// `x_1 ⊗ ... ⊗ x_r` expanded on the tensor PBW basis.
    pub fn pure(ring: &ScalarRing, factors: &[OqElement]) -> Self {
        let mut terms: BTreeMap<Vec<PbwIndex>, Scalar> = BTreeMap::from([(Vec::new(), ring.one())]);
        for x in factors {
            assert!(x.ring() == ring, "tensor factor ring mismatch");
            let mut next = BTreeMap::new();
            for (idx, c) in &terms {
                for (k, y) in x.terms() {
                    let mut i = idx.clone();
                    i.push(*k);
                    next.insert(i, c * y);
                }
            }
            terms = next;
        }
        TensorElement {
            ring: ring.clone(),
            arity: factors.len(),
            terms,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<PbwIndex>, &Scalar)> {
        self.terms.iter()
    }

    fn add_term(&mut self, k: Vec<PbwIndex>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    /// Lexicographically largest index tuple in the support.
    pub fn deg(&self) -> Result<Vec<PbwIndex>> {
        self.terms.keys().next_back().cloned().ok_or(Error::ZeroDegree)
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    /// Componentwise product.
    pub fn mul(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        let ring = &self.ring;
        let mut out = TensorElement::zero(ring, self.arity);
        for (k, x) in &self.terms {
            for (m, y) in &other.terms {
                let factors: Vec<OqElement> = k
                    .iter()
                    .zip(m)
                    .map(|(ki, mi)| &OqElement::term(ring, *ki, ring.one()) * &OqElement::term(ring, *mi, ring.one()))
                    .collect();
                let coeff = x * y;
                for (idx, c) in TensorElement::pure(ring, &factors).terms {
                    out.add_term(idx, &coeff * &c);
                }
            }
        }
        Ok(out)
    }

    fn in_aq_power(&self) -> Result<bool> {
        let n = self.ring.order().ok_or(Error::RequiresRootOfUnity)?;
        Ok(self.terms.keys().all(|k| k.iter().all(|x| x.divisible_by(n))))
    }
}

/// `(x_1 ⊗ ... ⊗ x_r) · (y_1 ⊗ ... ⊗ y_r)`.
pub fn tensor_mul(xs: &[OqElement], ys: &[OqElement]) -> Result<TensorElement> {
    if xs.len() != ys.len() {
        return Err(Error::ArityMismatch(xs.len(), ys.len()));
    }
    let Some(first) = xs.first().or(ys.first()) else {
        return Err(Error::ArityMismatch(0, 0));
    };
    let ring = first.ring().clone();
    let prods: Vec<OqElement> = xs.iter().zip(ys).map(|(x, y)| x * y).collect();
    Ok(TensorElement::pure(&ring, &prods))
}

/// Witness: the leading tuple of the sum and the predicted tuple per summand.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TensorDegreeWitness {
    pub leading: Vec<PbwIndex>,
    pub predicted: Vec<(Vec<PbwIndex>, Vec<PbwIndex>)>,
}

/// Certify that `Σ_k coeffs[k] · (O_{k_1} ⊗ ... ⊗ O_{k_r})` is nonzero for
/// nonzero coefficients in the tensor power of `A_q` and `k_i` in `D`.
///
/// Leading tuples are predicted componentwise by `psi`; they must be pairwise
/// distinct and the largest must be the leading tuple of the expanded sum.
pub fn tensor_independence_certificate(
    ring: &ScalarRing,
    arity: usize,
    coeffs: &BTreeMap<Vec<PbwIndex>, TensorElement>,
) -> Result<Certificate<TensorDegreeWitness>> {
    let n = ring.order().ok_or(Error::RequiresRootOfUnity)?;
    let mut predicted = Vec::with_capacity(coeffs.len());
    let mut sum = TensorElement::zero(ring, arity);
    for (k, c) in coeffs {
        if k.len() != arity {
            return Err(Error::ArityMismatch(k.len(), arity));
        }
        if c.arity != arity {
            return Err(Error::ArityMismatch(c.arity, arity));
        }
        if let Some(bad) = k.iter().find(|x| !in_d(**x, n)) {
            return Err(Error::NotInD(bad.to_string()));
        }
        if c.is_zero() {
            return Err(Error::ZeroCoefficient(format!("{k:?}")));
        }
        if !c.in_aq_power()? {
            return Err(Error::NotInFrobeniusImage(format!("{c:?}")));
        }
        let lead = c.deg()?;
        let p = lead
            .iter()
            .zip(k)
            .map(|(l, ki)| psi(n, PbwIndex::new(l.a / n, l.d / n, l.b / n, l.c / n), *ki))
            .collect::<Result<Vec<_>>>()?;
        predicted.push((k.clone(), p));
        let basis = TensorElement {
            ring: ring.clone(),
            arity,
            terms: BTreeMap::from([(k.clone(), ring.one())]),
        };
        sum = sum.add(&c.mul(&basis)?)?;
    }
    let distinct: BTreeSet<&Vec<PbwIndex>> = predicted.iter().map(|(_, p)| p).collect();
    if distinct.len() != predicted.len() {
        return Ok(Certificate::refuted("two summands share a leading tuple"));
    }
    let Some(expected) = distinct.iter().next_back().map(|p| (*p).clone()) else {
        return Ok(Certificate::refuted("empty combination"));
    };
    match sum.deg() {
        Err(_) => Ok(Certificate::refuted("combination expands to zero")),
        Ok(lead) if lead != expected => Ok(Certificate::refuted(format!(
            "leading tuple {lead:?} differs from predicted {expected:?}"
        ))),
        Ok(leading) => Ok(Certificate::Certified {
            witness: TensorDegreeWitness { leading, predicted },
        }),
    }
}
