//! Quantum tori `Y_i Y_j = mu^{2 sigma_ij} Y_j Y_i` in ordered-monomial form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalars::{Scalar, ScalarRing};

use super::triangulation::ExchangeMatrix;

#[derive(Debug)]
struct TorusInner {
    ring: ScalarRing,
    sigma: ExchangeMatrix,
    param_exp: i64,
}

/// A quantum torus over `ring` with parameter `mu = q^{1/2 * param_exp}`.
#[derive(Clone, Debug)]
pub struct QuantumTorus {
    inner: Arc<TorusInner>,
}

impl PartialEq for QuantumTorus {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.ring == other.inner.ring
                && self.inner.sigma == other.inner.sigma
                && self.mu_power(1) == other.mu_power(1))
    }
}

impl Eq for QuantumTorus {}

impl QuantumTorus {
    pub fn new(ring: &ScalarRing, sigma: ExchangeMatrix, param_exp: i64) -> Self {
        QuantumTorus {
            inner: Arc::new(TorusInner {
                ring: ring.clone(),
                sigma,
                param_exp,
            }),
        }
    }

    /// The torus whose parameter is `mu^{n^2}`, the source of the Frobenius embedding.
    pub fn frobenius_source(&self, n: u32) -> QuantumTorus {
        let n = n as i64;
        QuantumTorus::new(&self.inner.ring, self.inner.sigma.clone(), self.inner.param_exp * n * n)
    }

    pub fn ring(&self) -> &ScalarRing {
        &self.inner.ring
    }

    pub fn sigma(&self) -> &ExchangeMatrix {
        &self.inner.sigma
    }

    pub fn rank(&self) -> usize {
        self.inner.sigma.size()
    }

    pub fn param_exp(&self) -> i64 {
        self.inner.param_exp
    }

    /// `mu^e`.
    pub fn mu_power(&self, e: i64) -> Scalar {
        self.inner.ring.q_half_power(self.inner.param_exp * e)
    }

    pub fn zero(&self) -> QTElement {
        QTElement {
            torus: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> QTElement {
        self.ordered_monomial(vec![0; self.rank()])
    }

    /// `Y_i`.
    pub fn generator(&self, i: usize) -> QTElement {
        let mut k = vec![0; self.rank()];
        k[i] = 1;
        self.ordered_monomial(k)
    }

    /// `Y_1^{k_1} ... Y_n^{k_n}`.
    pub fn ordered_monomial(&self, k: Vec<i64>) -> QTElement {
        assert_eq!(k.len(), self.rank(), "exponent vector length");
        self.term(k, self.inner.ring.one())
    }

    pub fn term(&self, k: Vec<i64>, c: Scalar) -> QTElement {
        let mut e = self.zero();
        e.add_term(k, c);
        e
    }

    /// Exponent of `mu` relating the Weyl-normalized and ordered monomials.
    pub fn weyl_exponent(&self, k: &[i64]) -> i64 {
        let s = self.sigma();
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            for j in i + 1..n {
                acc += k[i] * k[j] * s.get(i, j);
            }
        }
        -acc
    }

    /// The Weyl-normalized monomial `[Y^k] = mu^{-Σ_{i<j} k_i k_j sigma_ij} Y^k`.
    pub fn weyl_monomial(&self, k: &[i64]) -> QTElement {
        self.term(k.to_vec(), self.mu_power(self.weyl_exponent(k)))
    }

    /// `[Y_{i_1} ... Y_{i_m}]` for a word of edge indices, by multiplying the generators
    /// in the given order and correcting by `mu^{-Σ_{s<t} sigma_{i_s i_t}}`.
    pub fn weyl_word(&self, word: &[usize]) -> QTElement {
        let mut acc = self.one();
        let mut correction = 0;
        for (s, &i) in word.iter().enumerate() {
            acc = &acc * &self.generator(i);
            for &j in &word[s + 1..] {
                correction += self.sigma().get(i, j);
            }
        }
        acc.scale(&self.mu_power(-correction))
    }

    /// Exponent of `mu` in `Y^a Y^b = mu^e Y^{a+b}` for ordered monomials.
    fn ordered_twist(&self, a: &[i64], b: &[i64]) -> i64 {
        let s = self.sigma();
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..i {
                acc += a[i] * b[j] * s.get(i, j);
            }
        }
        2 * acc
    }
}

/// A Laurent polynomial in a quantum torus, stored on ordered monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct QTElement {
    torus: QuantumTorus,
    terms: BTreeMap<Vec<i64>, Scalar>,
}

impl fmt::Debug for QTElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("({c})*Y{k:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl QTElement {
    pub fn torus(&self) -> &QuantumTorus {
        &self.torus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &[i64]) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_else(|| self.torus.ring().zero())
    }

    fn add_term(&mut self, k: Vec<i64>, c: Scalar) {
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

    pub fn scale(&self, c: &Scalar) -> QTElement {
        let mut out = self.torus.zero();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> QTElement {
        let mut acc = self.torus.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Product that reports a torus mismatch instead of panicking.
    pub fn try_mul(&self, rhs: &QTElement) -> Result<QTElement> {
        if self.torus != rhs.torus {
            return Err(Error::AlgebraMismatch("factors live in different quantum tori".into()));
        }
        let t = &self.torus;
        let mut out = t.zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let k: Vec<i64> = a.iter().zip(b).map(|(u, v)| u + v).collect();
                let c = &(x * y) * &t.mu_power(t.ordered_twist(a, b));
                out.add_term(k, c);
            }
        }
        Ok(out)
    }
}

/// The Frobenius embedding `Y^k ↦ Y^{N k}` from the `mu^{N^2}` torus into the `mu` torus.
pub fn frobenius_qt(x: &QTElement, target: &QuantumTorus, n: u32) -> Result<QTElement> {
    let source = x.torus();
    if source.ring() != target.ring() || source.sigma() != target.sigma() {
        return Err(Error::AlgebraMismatch("source and target tori differ in ring or sigma".into()));
    }
    let n2 = (n as i64) * (n as i64);
    if source.mu_power(1) != target.mu_power(n2) {
        return Err(Error::AlgebraMismatch("source parameter is not the N^2-th power of the target's".into()));
    }
    let mut out = target.zero();
    for (k, c) in x.terms() {
        out.add_term(k.iter().map(|v| v * n as i64).collect(), c.clone());
    }
    Ok(out)
}

impl<'a> Mul<&'a QTElement> for &'a QTElement {
    type Output = QTElement;
    fn mul(self, rhs: &'a QTElement) -> QTElement {
        self.try_mul(rhs).expect("quantum torus mismatch")
    }
}

impl<'a> Add<&'a QTElement> for &'a QTElement {
    type Output = QTElement;
    fn add(self, rhs: &'a QTElement) -> QTElement {
        assert!(self.torus == rhs.torus, "quantum torus mismatch");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Neg for &QTElement {
    type Output = QTElement;
    fn neg(self) -> QTElement {
        self.scale(&-self.torus.ring().one())
    }
}

impl<'a> Sub<&'a QTElement> for &'a QTElement {
    type Output = QTElement;
    fn sub(self, rhs: &'a QTElement) -> QTElement {
        self + &(-rhs)
    }
}

impl Mul for QTElement {
    type Output = QTElement;
    fn mul(self, rhs: QTElement) -> QTElement {
        &self * &rhs
    }
}

impl Add for QTElement {
    type Output = QTElement;
    fn add(self, rhs: QTElement) -> QTElement {
        &self + &rhs
    }
}

impl Sub for QTElement {
    type Output = QTElement;
    fn sub(self, rhs: QTElement) -> QTElement {
        &self - &rhs
    }
}
