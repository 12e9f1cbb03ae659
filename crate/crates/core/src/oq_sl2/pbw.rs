//! PBW normal form for `O_q(SL2)`.
//!
//! Elements are stored on the basis `O_k = a^{k1} d^{k2} b^{k3} c^{k4}` with
//! `k1 * k2 = 0`. Products of basis elements are computed in closed form:
//! `b` and `c` are moved right past `a`/`d` with their `q^{±2}` twists, and a
//! mixed block `a^x d^y` (or `d^y a^x`) is collapsed using
//! `ad = 1 + q^{-2} bc`, `da = 1 + q^2 bc` together with
//! `a (bc) = q^{-4} (bc) a` and `d (bc) = q^4 (bc) d`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{Scalar, ScalarRing};

/// Exponents `(k1, k2, k3, k4)` of `a, d, b, c`. The derived order is the
/// lexicographic order used for degrees.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct PbwIndex {
    pub a: u32,
    pub d: u32,
    pub b: u32,
    pub c: u32,
}

impl PbwIndex {
    pub const ZERO: PbwIndex = PbwIndex { a: 0, d: 0, b: 0, c: 0 };

    pub const fn new(a: u32, d: u32, b: u32, c: u32) -> Self {
        PbwIndex { a, d, b, c }
    }

    /// Membership in the PBW index set: `k1 * k2 = 0`.
    pub fn in_lambda(&self) -> bool {
        self.a == 0 || self.d == 0
    }

    pub fn scaled(&self, n: u32) -> PbwIndex {
        PbwIndex::new(self.a * n, self.d * n, self.b * n, self.c * n)
    }

    pub fn as_array(&self) -> [u32; 4] {
        [self.a, self.d, self.b, self.c]
    }

    pub fn from_array(k: [u32; 4]) -> Self {
        PbwIndex::new(k[0], k[1], k[2], k[3])
    }

    /// True when every entry is a multiple of `n`.
    pub fn divisible_by(&self, n: u32) -> bool {
        self.as_array().iter().all(|x| x % n == 0)
    }
}

impl Add for PbwIndex {
    type Output = PbwIndex;
    fn add(self, o: PbwIndex) -> PbwIndex {
        PbwIndex::new(self.a + o.a, self.d + o.d, self.b + o.b, self.c + o.c)
    }
}

impl fmt::Debug for PbwIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.d, self.b, self.c)
    }
}

impl fmt::Display for PbwIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An element of `O_q(SL2)` in PBW normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct OqElement {
    ring: ScalarRing,
    terms: BTreeMap<PbwIndex, Scalar>,
}

impl fmt::Debug for OqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for OqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("({})*O{}", c, k)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl OqElement {
    pub fn zero(ring: &ScalarRing) -> Self {
        OqElement {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &ScalarRing) -> Self {
        Self::term(ring, PbwIndex::ZERO, ring.one())
    }

    /// The basis element `O_k`; `k` must lie in the PBW index set.
    pub fn basis(ring: &ScalarRing, k: PbwIndex) -> Result<Self> {
        if !k.in_lambda() {
            return Err(Error::NotInLambda(k.to_string()));
        }
        Ok(Self::term(ring, k, ring.one()))
    }

    /// `c * O_k` without the membership check; callers guarantee `k` is normal.
    pub(crate) fn term(ring: &ScalarRing, k: PbwIndex, c: Scalar) -> Self {
        let mut e = Self::zero(ring);
        e.add_term(k, c);
        e
    }

    /// `a^{k1} d^{k2} b^{k3} c^{k4}` for an arbitrary quadruple, in normal form.
    pub fn monomial(ring: &ScalarRing, k: PbwIndex) -> Self {
        if k.in_lambda() {
            return Self::term(ring, k, ring.one());
        }
        let left = Self::term(ring, PbwIndex::new(k.a, 0, 0, 0), ring.one());
        let right = Self::term(ring, PbwIndex::new(0, k.d, k.b, k.c), ring.one());
        &left * &right
    }

    pub fn from_terms(ring: &ScalarRing, terms: impl IntoIterator<Item = (PbwIndex, Scalar)>) -> Result<Self> {
        let mut e = Self::zero(ring);
        for (k, c) in terms {
            if !k.in_lambda() {
                return Err(Error::NotInLambda(k.to_string()));
            }
            e.add_term(k, c);
        }
        Ok(e)
    }

    pub fn ring(&self) -> &ScalarRing {
        &self.ring
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

    pub fn terms(&self) -> impl Iterator<Item = (&PbwIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &PbwIndex> {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &PbwIndex) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Lexicographically largest index in the support.
    pub fn deg(&self) -> Result<PbwIndex> {
        self.terms.keys().next_back().copied().ok_or(Error::ZeroDegree)
    }

    pub fn scale(&self, c: &Scalar) -> OqElement {
        let mut out = Self::zero(&self.ring);
        for (k, x) in &self.terms {
            out.add_term(*k, x * c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, k: PbwIndex, c: Scalar) {
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

    pub fn pow(&self, e: u32) -> OqElement {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

/// Coefficients of `Π (1 + c_s u)` in the central-ish variable `u = bc`.
fn product_of_linear(ring: &ScalarRing, factors: impl Iterator<Item = Scalar>) -> Vec<Scalar> {
    let mut poly = vec![ring.one()];
    for c in factors {
        poly.push(ring.zero());
        for t in (1..poly.len()).rev() {
            let shifted = &c * &poly[t - 1];
            poly[t] += &shifted;
        }
    }
    poly
}

/// `a^x d^y = a^{x-m} d^{y-m} Π_{s=1}^{m} (1 + q^{-2-4(y-s)} bc)`, `m = min(x, y)`.
pub(crate) fn collapse_ad(ring: &ScalarRing, x: u32, y: u32) -> (u32, u32, Vec<Scalar>) {
    let m = x.min(y);
    let poly = product_of_linear(ring, (1..=m).map(|s| ring.q_power(-2 - 4 * (y as i64 - s as i64))));
    (x - m, y - m, poly)
}

/// `d^y a^x = d^{y-m} a^{x-m} Π_{s=1}^{m} (1 + q^{2+4(x-s)} bc)`, `m = min(x, y)`.
pub(crate) fn collapse_da(ring: &ScalarRing, y: u32, x: u32) -> (u32, u32, Vec<Scalar>) {
    let m = x.min(y);
    let poly = product_of_linear(ring, (1..=m).map(|s| ring.q_power(2 + 4 * (x as i64 - s as i64))));
    (x - m, y - m, poly)
}

fn basis_product(ring: &ScalarRing, k: PbwIndex, m: PbwIndex, coeff: &Scalar, out: &mut OqElement) {
    // b^{k3} c^{k4} a^{m1} d^{m2} = q^{2(k3+k4)(m1-m2)} a^{m1} d^{m2} b^{k3} c^{k4}
    let twist = 2 * (k.b as i64 + k.c as i64) * (m.a as i64 - m.d as i64);
    let coeff = coeff * &ring.q_power(twist);
    let (ea, ed, poly) = if k.d == 0 {
        collapse_ad(ring, k.a + m.a, m.d)
    } else if m.a == 0 {
        (0, k.d + m.d, vec![ring.one()])
    } else {
        collapse_da(ring, k.d, m.a)
    };
    for (t, c) in poly.iter().enumerate() {
        let t = t as u32;
        let idx = PbwIndex::new(ea, ed, k.b + m.b + t, k.c + m.c + t);
        out.add_term(idx, &coeff * c);
    }
}

impl<'a> Mul<&'a OqElement> for &'a OqElement {
    type Output = OqElement;
    fn mul(self, rhs: &'a OqElement) -> OqElement {
        assert!(self.ring == rhs.ring, "O_q element ring mismatch");
        let mut out = OqElement::zero(&self.ring);
        for (k, x) in &self.terms {
            for (m, y) in &rhs.terms {
                basis_product(&self.ring, *k, *m, &(x * y), &mut out);
            }
        }
        out
    }
}

impl<'a> Add<&'a OqElement> for &'a OqElement {
    type Output = OqElement;
    fn add(self, rhs: &'a OqElement) -> OqElement {
        assert!(self.ring == rhs.ring, "O_q element ring mismatch");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Neg for &OqElement {
    type Output = OqElement;
    fn neg(self) -> OqElement {
        self.scale(&-self.ring.one())
    }
}

impl<'a> Sub<&'a OqElement> for &'a OqElement {
    type Output = OqElement;
    fn sub(self, rhs: &'a OqElement) -> OqElement {
        self + &(-rhs)
    }
}

impl Mul for OqElement {
    type Output = OqElement;
    fn mul(self, rhs: OqElement) -> OqElement {
        &self * &rhs
    }
}

impl Add for OqElement {
    type Output = OqElement;
    fn add(self, rhs: OqElement) -> OqElement {
        &self + &rhs
    }
}

impl Sub for OqElement {
    type Output = OqElement;
    fn sub(self, rhs: OqElement) -> OqElement {
        &self - &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(a: u32, d: u32, b: u32, c: u32) -> PbwIndex {
        PbwIndex::new(a, d, b, c)
    }

    #[test]
    fn a_times_d() {
        let r = ScalarRing::generic();
        let a = OqElement::basis(&r, k(1, 0, 0, 0)).unwrap();
        let d = OqElement::basis(&r, k(0, 1, 0, 0)).unwrap();
        let ad = &a * &d;
        let expected = OqElement::from_terms(&r, [(k(0, 0, 1, 1), r.q_power(-2)), (PbwIndex::ZERO, r.one())]).unwrap();
        assert_eq!(ad, expected);
        let da = &d * &a;
        let expected = OqElement::from_terms(&r, [(k(0, 0, 1, 1), r.q_power(2)), (PbwIndex::ZERO, r.one())]).unwrap();
        assert_eq!(da, expected);
    }

    #[test]
    fn unit_is_neutral() {
        let r = ScalarRing::root_of_unity(5).unwrap();
        let x = OqElement::monomial(&r, k(2, 3, 1, 4));
        let one = OqElement::one(&r);
        assert_eq!(&one * &x, x);
        assert_eq!(&x * &one, x);
    }

    #[test]
    fn lambda_membership() {
        let r = ScalarRing::generic();
        assert!(matches!(OqElement::basis(&r, k(1, 1, 0, 0)), Err(Error::NotInLambda(_))));
        assert!(k(0, 3, 1, 1).in_lambda());
    }

    #[test]
    fn deg_is_lex_max() {
        let r = ScalarRing::generic();
        let x = OqElement::from_terms(&r, [(k(0, 2, 1, 0), r.one()), (k(0, 1, 3, 3), r.one())]).unwrap();
        assert_eq!(x.deg().unwrap(), k(0, 2, 1, 0));
        assert_eq!(OqElement::zero(&r).deg().unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn twists_against_b_and_c() {
        let r = ScalarRing::generic();
        let b = OqElement::basis(&r, k(0, 0, 1, 0)).unwrap();
        let c = OqElement::basis(&r, k(0, 0, 0, 1)).unwrap();
        let a = OqElement::basis(&r, k(1, 0, 0, 0)).unwrap();
        let d = OqElement::basis(&r, k(0, 1, 0, 0)).unwrap();
        assert_eq!(&b * &a, (&a * &b).scale(&r.q_power(2)));
        assert_eq!(&c * &a, (&a * &c).scale(&r.q_power(2)));
        assert_eq!(&d * &b, (&b * &d).scale(&r.q_power(2)));
        assert_eq!(&d * &c, (&c * &d).scale(&r.q_power(2)));
        assert_eq!(&b * &c, &c * &b);
    }
}
