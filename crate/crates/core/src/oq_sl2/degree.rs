//! The degree map on PBW monomials and its reindexing over the Frobenius subalgebra.

use crate::error::{Error, Result};
use crate::scalars::ScalarRing;

use super::pbw::PbwIndex;
use super::rewrite::monomial_by_rewriting;

/// Predicted leading index of `a^{k1} d^{k2} b^{k3} c^{k4}` for an arbitrary quadruple.
///
/// The mixed block `a^{k1} d^{k2}` loses `min(k1, k2)` letters of each kind and
/// contributes that many factors of `bc` to the top term.
pub fn phi(k: PbwIndex) -> PbwIndex {
    use std::cmp::Ordering::*;
    match k.a.cmp(&k.d) {
        Equal => PbwIndex::new(0, 0, k.b + k.a, k.c + k.d),
        Greater => PbwIndex::new(k.a - k.d, 0, k.b + k.d, k.c + k.d),
        Less => PbwIndex::new(0, k.d - k.a, k.b + k.a, k.c + k.a),
    }
}

/// Membership in `{(0, k2, k3, k4) : 0 <= k2, k3, k4 < n}`.
pub fn in_d(k: PbwIndex, n: u32) -> bool {
    k.a == 0 && k.d < n && k.b < n && k.c < n
}

/// `phi(n u + v)` for `u` in the PBW index set and `v` in the box `D`.
pub fn psi(n: u32, u: PbwIndex, v: PbwIndex) -> Result<PbwIndex> {
    if !u.in_lambda() {
        return Err(Error::NotInLambda(u.to_string()));
    }
    if !in_d(v, n) {
        return Err(Error::NotInD(v.to_string()));
    }
    Ok(phi(u.scaled(n) + v))
}

/// Leading index of `O_k` computed from the closed formula.
pub fn deg_of_monomial(k: PbwIndex) -> PbwIndex {
    phi(k)
}

/// Leading index of `O_k` computed by rewriting the word `a^{k1} d^{k2} b^{k3} c^{k4}`.
pub fn deg_of_monomial_by_rewriting(ring: &ScalarRing, k: PbwIndex) -> Result<PbwIndex> {
    monomial_by_rewriting(ring, k).deg()
}
