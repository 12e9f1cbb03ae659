//! The balanced sublattice, a basis of it extending the puncture vectors
//! `H_v`, the induced grading, and the center-free degree certificate.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::certificate::Certificate;
use crate::error::{Error, Result};

use super::torus::{frobenius_qt, QTElement, QuantumTorus};
use super::triangulation::{balanced_check, puncture_exponent, Triangulation};

type Matrix = Vec<Vec<i64>>;

/// Basis of the kernel of a 0/1 matrix over GF(2), lifted to 0/1 integer vectors.
fn gf2_kernel(rows: &[Vec<u8>], n: usize) -> Matrix {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] == 1) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] == 1 {
                for j in 0..n {
                    m[i][j] ^= m[r][j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0i64; n];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                if m[i][f] == 1 {
                    v[pc] = 1;
                }
            }
            v
        })
        .collect()
}

/// Row Hermite normal form of the lattice spanned by `gens`; zero rows dropped.
pub fn hermite_normal_form(mut gens: Matrix) -> Matrix {
    let n = gens.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..n {
        loop {
            let nonzero: Vec<usize> = (r..gens.len()).filter(|&i| gens[i][c] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&i) = nonzero.first() {
                    gens.swap(r, i);
                    if gens[r][c] < 0 {
                        gens[r].iter_mut().for_each(|x| *x = -*x);
                    }
                    let piv = gens[r][c];
                    for i in 0..r {
                        let f = gens[i][c].div_euclid(piv);
                        if f != 0 {
                            for j in 0..n {
                                gens[i][j] -= f * gens[r][j];
                            }
                        }
                    }
                    r += 1;
                }
                break;
            }
            let &small = nonzero.iter().min_by_key(|&&i| gens[i][c].abs()).expect("nonempty");
            for &i in &nonzero {
                if i != small {
                    let f = gens[i][c] / gens[small][c];
                    for j in 0..n {
                        gens[i][j] -= f * gens[small][j];
                    }
                }
            }
        }
    }
    gens.truncate(r);
    gens
}

/// Basis of the balanced sublattice in row Hermite normal form.
pub fn balanced_lattice_basis(t: &Triangulation) -> Matrix {
    let n = t.edge_count();
    let parity: Vec<Vec<u8>> = t
        .triangles()
        .iter()
        .map(|tri| {
            let mut row = vec![0u8; n];
            for &e in tri {
                row[e] ^= 1;
            }
            row
        })
        .collect();
    let mut gens = gf2_kernel(&parity, n);
    for i in 0..n {
        let mut v = vec![0; n];
        v[i] = 2;
        gens.push(v);
    }
    hermite_normal_form(gens)
}

/// Coordinates of `k` in an upper-triangular full-rank basis, if integral.
fn triangular_coordinates(basis: &Matrix, k: &[i64]) -> Option<Vec<i64>> {
    let n = basis.len();
    let mut rest = k.to_vec();
    let mut out = vec![0; n];
    for i in 0..n {
        let piv = basis[i][i];
        if rest[i] % piv != 0 {
            return None;
        }
        out[i] = rest[i] / piv;
        for j in i..n {
            rest[j] -= out[i] * basis[i][j];
        }
    }
    rest.iter().all(|x| *x == 0).then_some(out)
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect())
        .collect()
}

/// Exact inverse over the rationals, `None` when singular.
fn rational_inverse(m: &Matrix) -> Option<Vec<Vec<Ratio<i128>>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i128>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i128>> = row.iter().map(|x| Ratio::from_integer(*x as i128)).collect();
            r.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let piv = a[c][c];
        a[c].iter_mut().for_each(|x| *x /= piv);
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c];
                let pivot_row = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn determinant(m: &Matrix) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i128>>> = m.iter().map(|r| r.iter().map(|x| Ratio::from_integer(*x as i128)).collect()).collect();
    let mut det = Ratio::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return 0;
        };
        if p != c {
            a.swap(c, p);
            det = -det;
        }
        det *= a[c][c];
        for i in c + 1..n {
            let f = a[i][c] / a[c][c];
            let pivot_row = a[c].clone();
            for (x, y) in a[i].iter_mut().zip(pivot_row) {
                *x -= f * y;
            }
        }
    }
    det.to_integer()
}

/// Column-reduce `c` to `[H | 0]` with a unimodular `U`; returns `(H-part, U^{-1})`.
fn column_reduce(mut c: Matrix, n: usize) -> (Matrix, Matrix) {
    let p = c.len();
    let mut u_inv: Matrix = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    // Column op col_i -= f * col_j corresponds to row op row_j += f * row_i on U^{-1}.
    for r in 0..p {
        loop {
            let nonzero: Vec<usize> = (r..n).filter(|&j| c[r][j] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&j) = nonzero.first() {
                    if j != r {
                        for row in c.iter_mut() {
                            row.swap(r, j);
                        }
                        u_inv.swap(r, j);
                    }
                }
                break;
            }
            let &small = nonzero.iter().min_by_key(|&&j| c[r][j].abs()).expect("nonempty");
            for &j in &nonzero {
                if j != small {
                    let f = c[r][j] / c[r][small];
                    for row in c.iter_mut() {
                        row[j] -= f * row[small];
                    }
                    for col in 0..n {
                        u_inv[small][col] += f * u_inv[j][col];
                    }
                }
            }
        }
    }
    let h = c.iter().map(|row| row[..p].to_vec()).collect();
    (h, u_inv)
}

/// A basis `Z_1, ..., Z_n` of the balanced lattice whose first `p` vectors are
/// the puncture vectors `H_v` in fan order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZBasis {
    vectors: Matrix,
    lattice: Matrix,
    change: Matrix,
    change_inv: Matrix,
    punctures: usize,
}

impl ZBasis {
    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn puncture_count(&self) -> usize {
        self.punctures
    }

    /// The Hermite basis of the balanced lattice the completion was built over.
    pub fn lattice_basis(&self) -> &[Vec<i64>] {
        &self.lattice
    }

    /// Determinant of the change of basis from the Hermite basis to `Z`.
    pub fn change_determinant(&self) -> i128 {
        determinant(&self.change)
    }

    /// Coordinates of `k` in the `Z` basis.
    pub fn coordinates(&self, k: &[i64]) -> Result<Vec<i64>> {
        let c = triangular_coordinates(&self.lattice, k).ok_or_else(|| Error::NotBalanced(k.to_vec()))?;
        Ok(mat_mul(&vec![c], &self.change_inv).remove(0))
    }

    /// `Σ_i x_i Z_i`.
    pub fn combine(&self, x: &[i64]) -> Vec<i64> {
        mat_mul(&vec![x.to_vec()], &self.vectors).remove(0)
    }

    /// Grading `(x_1, ..., x_p)` of a balanced exponent vector.
    pub fn grading(&self, k: &[i64]) -> Result<Vec<i64>> {
        let mut x = self.coordinates(k)?;
        x.truncate(self.punctures);
        Ok(x)
    }

    /// The Weyl monomial `[Z^x]`.
    pub fn z_monomial(&self, torus: &QuantumTorus, x: &[i64]) -> QTElement {
        torus.weyl_monomial(&self.combine(x))
    }
}

/// Extend the puncture vectors to a basis of the balanced lattice.
pub fn balanced_z_basis(t: &Triangulation) -> Result<ZBasis> {
    let n = t.edge_count();
    let p = t.puncture_count();
    if p > n {
        return Err(Error::CompletionFailed(format!("{p} punctures exceed {n} edges")));
    }
    let lattice = balanced_lattice_basis(t);
    if lattice.len() != n {
        return Err(Error::CompletionFailed("balanced lattice is not of full rank".into()));
    }
    let mut coords = Vec::with_capacity(p);
    for name in t.puncture_names() {
        let h = puncture_exponent(t, name)?;
        let c = triangular_coordinates(&lattice, &h).ok_or_else(|| Error::NotBalanced(h.clone()))?;
        coords.push(c);
    }
    let (h_part, u_inv) = column_reduce(coords.clone(), n);
    let det_h = determinant(&h_part);
    if det_h.abs() != 1 {
        return Err(Error::CompletionFailed(format!(
            "puncture vectors span a sublattice of index {} in their saturation",
            det_h.abs()
        )));
    }
    let mut change = coords;
    change.extend(u_inv.into_iter().skip(p));
    if determinant(&change).abs() != 1 {
        return Err(Error::CompletionFailed("completed change of basis is not unimodular".into()));
    }
    let inv = rational_inverse(&change).ok_or_else(|| Error::CompletionFailed("singular change of basis".into()))?;
    let change_inv: Matrix = inv
        .iter()
        .map(|r| r.iter().map(|x| x.is_integer().then(|| x.to_integer() as i64)).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::CompletionFailed("inverse change of basis is not integral".into()))?;
    let vectors = mat_mul(&change, &lattice);
    debug_assert!(vectors.iter().all(|v| balanced_check(v, t)));
    Ok(ZBasis {
        vectors,
        lattice,
        change,
        change_inv,
        punctures: p,
    })
}

/// Lexicographically largest grading over the support of a nonzero balanced element.
pub fn qt_deg(x: &QTElement, zb: &ZBasis) -> Result<Vec<i64>> {
    let mut best: Option<Vec<i64>> = None;
    for k in x.support() {
        let g = zb.grading(k)?;
        if best.as_ref().is_none_or(|b| g > *b) {
            best = Some(g);
        }
    }
    best.ok_or(Error::ZeroDegree)
}

/// Split a balanced element into its homogeneous components.
pub fn grade(x: &QTElement, zb: &ZBasis) -> Result<BTreeMap<Vec<i64>, QTElement>> {
    let mut out: BTreeMap<Vec<i64>, QTElement> = BTreeMap::new();
    for (k, c) in x.terms() {
        let g = zb.grading(k)?;
        let piece = x.torus().term(k.clone(), c.clone());
        let slot = out.entry(g).or_insert_with(|| x.torus().zero());
        *slot = &*slot + &piece;
    }
    Ok(out)
}

/// Certify that the combined degrees `N x_k + k` are pairwise distinct.
/// The witness is the largest of them.
pub fn center_free_certificate(
    n: u32,
    p: usize,
    x_map: &BTreeMap<Vec<i64>, Vec<i64>>,
) -> Result<Certificate<Vec<i64>>> {
    let mut seen = BTreeSet::new();
    for (k, x) in x_map {
        if k.len() != p {
            return Err(Error::ArityMismatch(k.len(), p));
        }
        if x.len() != p {
            return Err(Error::ArityMismatch(x.len(), p));
        }
        let combined: Vec<i64> = x.iter().zip(k).map(|(xi, ki)| n as i64 * xi + ki).collect();
        if !seen.insert(combined.clone()) {
            return Ok(Certificate::refuted(format!("combined degree {combined:?} occurs twice")));
        }
    }
    match seen.into_iter().next_back() {
        Some(max) => Ok(Certificate::Certified { witness: max }),
        None => Ok(Certificate::refuted("empty family")),
    }
}

/// Expand `Σ_k F(l_k) Π_i (Z_i + Z_i^{-1})^{k_i}` in `target` and certify it is
/// nonzero with degree `max_k (N deg(l_k) + k)`.
///
/// Each `l_k` lives in the `mu^{N^2}` torus and must be balanced; `k` ranges over
/// nonnegative `p`-tuples.
pub fn center_free_expansion_certificate(
    target: &QuantumTorus,
    zb: &ZBasis,
    n: u32,
    elements: &BTreeMap<Vec<i64>, QTElement>,
) -> Result<Certificate<Vec<i64>>> {
    let p = zb.puncture_count();
    let mut sum = target.zero();
    let mut degrees = BTreeMap::new();
    for (k, l) in elements {
        if k.len() != p {
            return Err(Error::ArityMismatch(k.len(), p));
        }
        if let Some(bad) = k.iter().find(|x| **x < 0) {
            return Err(Error::Parse(format!("negative puncture exponent {bad}")));
        }
        degrees.insert(k.clone(), qt_deg(l, zb)?);
        let mut term = frobenius_qt(l, target, n)?;
        for (i, &ki) in k.iter().enumerate() {
            let mut unit = vec![0; zb.vectors().len()];
            unit[i] = 1;
            let plus = zb.z_monomial(target, &unit);
            unit[i] = -1;
            let minus = zb.z_monomial(target, &unit);
            term = &term * &(&plus + &minus).pow(ki as u32);
        }
        sum = &sum + &term;
    }
    let expected = match center_free_certificate(n, p, &degrees)? {
        Certificate::Certified { witness } => witness,
        refuted => return Ok(refuted),
    };
    match qt_deg(&sum, zb) {
        Err(Error::ZeroDegree) => Ok(Certificate::refuted("expanded sum vanishes")),
        Err(e) => Err(e),
        Ok(d) if d != expected => Ok(Certificate::refuted(format!("degree {d:?} differs from predicted {expected:?}"))),
        Ok(d) => Ok(Certificate::Certified { witness: d }),
    }
}
