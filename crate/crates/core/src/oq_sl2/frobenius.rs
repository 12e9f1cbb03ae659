//! The Frobenius subalgebra `A_q` generated by `a^N, b^N, c^N, d^N`, the
//! basis box `D`, the spanning supplement `B`, and the constructive
//! expansions of PBW monomials over them.

use std::collections::{BTreeMap, BTreeSet};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::scalars::{Scalar, ScalarRing};

use super::degree::{in_d, psi};
use super::pbw::{collapse_ad, collapse_da, OqElement, PbwIndex};
use super::rewrite::Generator;

fn order_of(ring: &ScalarRing) -> Result<u32> {
    ring.order().ok_or(Error::RequiresRootOfUnity)
}

/// `g ↦ g^N`.
pub fn frobenius_generator_image(ring: &ScalarRing, g: Generator) -> Result<OqElement> {
    let n = order_of(ring)?;
    Ok(OqElement::term(ring, g.index().scaled(n), ring.one()))
}

/// `O_{N v}` for `v` in the PBW index set.
pub fn aq_monomial(ring: &ScalarRing, v: PbwIndex) -> Result<OqElement> {
    let n = order_of(ring)?;
    OqElement::basis(ring, v.scaled(n))
}

/// True when every index in the support is a multiple of `N`.
pub fn is_in_aq(x: &OqElement) -> Result<bool> {
    let n = order_of(x.ring())?;
    Ok(x.support().all(|k| k.divisible_by(n)))
}

/// The box `{(0, k2, k3, k4) : 0 <= k_i <= N - 1}` in lexicographic order.
pub fn d_set(n: u32) -> Vec<PbwIndex> {
    let mut out = Vec::with_capacity((n * n * n) as usize);
    for k2 in 0..n {
        for k3 in 0..n {
            for k4 in 0..n {
                out.push(PbwIndex::new(0, k2, k3, k4));
            }
        }
    }
    out
}

/// `{(N - j, 0, k2, k3) : 1 <= j <= N - 1, 0 <= k2, k3 <= N - 1, k2 < j or k3 < j}`.
pub fn b_set(n: u32) -> Vec<PbwIndex> {
    let mut out = Vec::new();
    for j in 1..n {
        for k2 in 0..n {
            for k3 in 0..n {
                if k2 < j || k3 < j {
                    out.push(PbwIndex::new(n - j, 0, k2, k3));
                }
            }
        }
    }
    out
}

pub fn in_b(k: PbwIndex, n: u32) -> bool {
    if k.d != 0 || k.a == 0 || k.a >= n || k.b >= n || k.c >= n {
        return false;
    }
    let j = n - k.a;
    k.b < j || k.c < j
}

pub fn count_d(n: u32) -> usize {
    d_set(n).len()
}

/// Size of the union of `D` and `B`, by enumeration.
pub fn count_db(n: u32) -> usize {
    d_set(n).into_iter().chain(b_set(n)).collect::<BTreeSet<_>>().len()
}

/// How the top coefficient of an `E_t` candidate is tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TopCoefficient {
    /// Exactly `q^s` for an integer `s`.
    #[default]
    Strict,
    /// `±q^s`.
    Lenient,
}

/// Membership in `E_t`: polynomials `k_t (bc)^t + ... + k_1 bc + 1` whose top
/// coefficient is a power of `q`.
pub fn is_in_e(x: &OqElement, t: u32, top: TopCoefficient) -> bool {
    if x.terms().any(|(k, _)| k.a != 0 || k.d != 0 || k.b != k.c || k.b > t) {
        return false;
    }
    if !x.coeff(&PbwIndex::ZERO).is_one() {
        return false;
    }
    if t == 0 {
        return x.len() == 1;
    }
    let kt = x.coeff(&PbwIndex::new(0, 0, t, t));
    match top {
        TopCoefficient::Strict => kt.as_q_power().is_some(),
        TopCoefficient::Lenient => kt.as_signed_q_power().is_some(),
    }
}

/// Witness for an independence certificate: the leading index of the sum
/// together with the predicted leading index of every summand.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DegreeWitness {
    pub leading: PbwIndex,
    pub predicted: Vec<(PbwIndex, PbwIndex)>,
}

/// Leading exponent `v` of an `A_q` element, where the leading index is `N v`.
fn leading_frobenius_exponent(c: &OqElement, n: u32) -> Result<PbwIndex> {
    let d = c.deg()?;
    Ok(PbwIndex::new(d.a / n, d.d / n, d.b / n, d.c / n))
}

fn check_aq_coefficient(k: &PbwIndex, c: &OqElement) -> Result<()> {
    if c.is_zero() {
        return Err(Error::ZeroCoefficient(k.to_string()));
    }
    if !is_in_aq(c)? {
        return Err(Error::NotInFrobeniusImage(c.to_string()));
    }
    Ok(())
}

/// Certify that `Σ_k coeffs[k] · O_k` is nonzero for a map from `D` to nonzero
/// elements of `A_q`.
///
/// Two checks are made. The reindexed leading degrees `psi(v_k, k)` must be
/// pairwise distinct, and the expanded sum must be nonzero with leading index
/// equal to the largest of them.
pub fn independence_certificate(
    ring: &ScalarRing,
    coeffs: &BTreeMap<PbwIndex, OqElement>,
) -> Result<Certificate<DegreeWitness>> {
    let n = order_of(ring)?;
    let mut predicted = Vec::with_capacity(coeffs.len());
    for (k, c) in coeffs {
        if !in_d(*k, n) {
            return Err(Error::NotInD(k.to_string()));
        }
        check_aq_coefficient(k, c)?;
        predicted.push((*k, psi(n, leading_frobenius_exponent(c, n)?, *k)?));
    }
    let distinct: BTreeSet<PbwIndex> = predicted.iter().map(|(_, p)| *p).collect();
    if distinct.len() != predicted.len() {
        return Ok(Certificate::refuted("two summands share a leading degree"));
    }
    let mut sum = OqElement::zero(ring);
    for (k, c) in coeffs {
        sum = &sum + &(c * &OqElement::term(ring, *k, ring.one()));
    }
    let Some(expected) = distinct.iter().next_back().copied() else {
        return Ok(Certificate::refuted("empty combination"));
    };
    match sum.deg() {
        Err(_) => Ok(Certificate::refuted("combination expands to zero")),
        Ok(lead) if lead != expected => Ok(Certificate::refuted(format!(
            "leading index {lead} differs from predicted {expected}"
        ))),
        Ok(leading) => Ok(Certificate::Certified {
            witness: DegreeWitness { leading, predicted },
        }),
    }
}

fn accumulate(map: &mut BTreeMap<PbwIndex, OqElement>, k: PbwIndex, c: OqElement) {
    let slot = map.entry(k).or_insert_with(|| OqElement::zero(c.ring()));
    *slot = &*slot + &c;
    if slot.is_zero() {
        map.remove(&k);
    }
}

/// Split `O_m` with `m.a` a multiple of `N` or `m.a = 0` as `O_{N u} · O_r`,
/// with `r` in `D` (no residual `a`).
fn split_over_aq(m: PbwIndex, n: u32) -> (PbwIndex, PbwIndex) {
    let u = PbwIndex::new(m.a - m.a % n, m.d - m.d % n, m.b - m.b % n, m.c - m.c % n);
    let r = PbwIndex::new(m.a % n, m.d % n, m.b % n, m.c % n);
    (u, r)
}

/// `d^{N s} · O_m = Σ_k coeffs[k] · O_k` with `k` in `D` and coefficients in `A_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedExpression {
    pub s: u32,
    pub coeffs: BTreeMap<PbwIndex, OqElement>,
}

impl LocalizedExpression {
    /// Re-expand both sides with the PBW product and compare exactly.
    pub fn verify(&self, ring: &ScalarRing, m: PbwIndex) -> Result<bool> {
        let n = order_of(ring)?;
        let dn = OqElement::term(ring, PbwIndex::new(0, n, 0, 0), ring.one());
        let lhs = &dn.pow(self.s) * &OqElement::basis(ring, m)?;
        let mut rhs = OqElement::zero(ring);
        for (k, c) in &self.coeffs {
            if !in_d(*k, n) || !is_in_aq(c)? {
                return Ok(false);
            }
            rhs = &rhs + &(c * &OqElement::term(ring, *k, ring.one()));
        }
        Ok(lhs == rhs)
    }
}

/// Express `O_m` over `D` after clearing denominators by powers of `d^N`.
///
/// Monomials without an `a`-residue modulo `N` split directly. Otherwise
/// `m.a = u N + v` with `0 < v < N`, and one factor of `d^N` turns `a^v` into
/// `d^{N - v}` times a polynomial in `bc`, while `a^{u N}` stays in `A_q`.
pub fn localized_express(ring: &ScalarRing, m: PbwIndex) -> Result<LocalizedExpression> {
    let n = order_of(ring)?;
    if !m.in_lambda() {
        return Err(Error::NotInLambda(m.to_string()));
    }
    let mut coeffs = BTreeMap::new();
    let v = m.a % n;
    if v == 0 {
        let (u, r) = split_over_aq(m, n);
        coeffs.insert(r, OqElement::term(ring, u, ring.one()));
        return Ok(LocalizedExpression { s: 0, coeffs });
    }
    let a_block = m.a - v;
    let (ea, ed, poly) = collapse_da(ring, n, v);
    debug_assert_eq!((ea, ed), (0, n - v));
    for (t, l) in poly.into_iter().enumerate() {
        let t = t as u32;
        let rest = PbwIndex::new(0, ed, m.b + t, m.c + t);
        let (w, r) = split_over_aq(rest, n);
        let coeff = OqElement::term(ring, PbwIndex::new(a_block, 0, w.b, w.c), l);
        accumulate(&mut coeffs, r, coeff);
    }
    Ok(LocalizedExpression { s: 1, coeffs })
}

/// Expansion of `O_{(N - j, 0, r3, r4)}` with `r3, r4 < N` over `D ∪ B`.
fn express_residue(
    ring: &ScalarRing,
    n: u32,
    j: u32,
    r3: u32,
    r4: u32,
    memo: &mut BTreeMap<(u32, u32), BTreeMap<PbwIndex, OqElement>>,
) -> Result<BTreeMap<PbwIndex, OqElement>> {
    if let Some(hit) = memo.get(&(r3, r4)) {
        return Ok(hit.clone());
    }
    let idx = PbwIndex::new(n - j, 0, r3, r4);
    let mut out = BTreeMap::new();
    if r3 < j || r4 < j {
        out.insert(idx, OqElement::one(ring));
    } else {
        // a^N d^j = a^{N-j} Σ_i l_i (bc)^i; solve for the top term and multiply
        // on the right by b^{r3-j} c^{r4-j}.
        let (_, _, l) = collapse_ad(ring, j, j);
        let top_inv = l[j as usize].inv()?;
        let an = OqElement::term(ring, PbwIndex::new(n, 0, 0, 0), top_inv.clone());
        accumulate(&mut out, PbwIndex::new(0, j, r3 - j, r4 - j), an);
        for (i, li) in l.iter().enumerate().take(j as usize) {
            let i = i as u32;
            let factor = -(li * &top_inv);
            let sub = express_residue(ring, n, j, r3 - j + i, r4 - j + i, memo)?;
            for (k, c) in sub {
                accumulate(&mut out, k, c.scale(&factor));
            }
        }
    }
    memo.insert((r3, r4), out.clone());
    Ok(out)
}

/// `O_m = Σ_k coeffs[k] · O_k` with `k` in `D ∪ B` and coefficients in `A_q`.
pub fn express_in_db(ring: &ScalarRing, m: PbwIndex) -> Result<BTreeMap<PbwIndex, OqElement>> {
    let n = order_of(ring)?;
    if !m.in_lambda() {
        return Err(Error::NotInLambda(m.to_string()));
    }
    let (u, r) = split_over_aq(m, n);
    let outer = OqElement::term(ring, u, ring.one());
    if r.a == 0 {
        return Ok(BTreeMap::from([(r, outer)]));
    }
    let mut memo = BTreeMap::new();
    let inner = express_residue(ring, n, n - r.a, r.b, r.c, &mut memo)?;
    Ok(inner.into_iter().map(|(k, c)| (k, &outer * &c)).collect())
}

/// Re-expand an output of [`express_in_db`] and compare with `O_m`.
pub fn verify_db_expression(ring: &ScalarRing, m: PbwIndex, coeffs: &BTreeMap<PbwIndex, OqElement>) -> Result<bool> {
    let n = order_of(ring)?;
    let mut rhs = OqElement::zero(ring);
    for (k, c) in coeffs {
        if !(in_d(*k, n) || in_b(*k, n)) || !is_in_aq(c)? {
            return Ok(false);
        }
        rhs = &rhs + &(c * &OqElement::term(ring, *k, ring.one()));
    }
    Ok(rhs == OqElement::basis(ring, m)?)
}

/// Scalar helper used by callers that build `A_q` coefficients by hand.
pub fn aq_term(ring: &ScalarRing, v: PbwIndex, c: Scalar) -> Result<OqElement> {
    let n = order_of(ring)?;
    if !v.in_lambda() {
        return Err(Error::NotInLambda(v.to_string()));
    }
    if c.is_zero() {
        return Err(Error::ZeroCoefficient(v.to_string()));
    }
    Ok(OqElement::term(ring, v.scaled(n), c))
}
