//! Skein modules of the solid torus (`Q[x]`, with `x` the core) and of
//! `S^1 x S^2`, presented as the quotient of `Q[x]` killing `A_i` for `N ∤ i + 2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chebyshev::{chebyshev_a, chebyshev_t, Polynomial};
use crate::error::{Error, Result};

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::InvalidOrder(n as i64));
    }
    Ok(())
}

/// Coordinates of `p` over `{1, A_1, A_2, ...}`; entry `i > 0` is the coefficient of `A_i`
/// and entry `0` the constant.
pub fn a_basis_expand(p: &Polynomial) -> Vec<BigRational> {
    let Some(top) = p.degree() else {
        return Vec::new();
    };
    let mut out = vec![BigRational::zero(); top + 1];
    let mut rest = p.clone();
    while let Some(d) = rest.degree() {
        let lead = rest.leading_coefficient().cloned().expect("nonzero");
        let basis = if d == 0 {
            Polynomial::one()
        } else {
            chebyshev_a(d).expect("d >= 1")
        };
        rest = &rest - &basis.scale(&lead);
        out[d] += lead;
    }
    out
}

/// Inverse of [`a_basis_expand`].
pub fn a_basis_resum(coeffs: &[BigRational]) -> Polynomial {
    coeffs.iter().enumerate().fold(Polynomial::zero(), |acc, (i, c)| {
        let basis = if i == 0 {
            Polynomial::one()
        } else {
            chebyshev_a(i).expect("i >= 1")
        };
        &acc + &basis.scale(c)
    })
}

/// An element `c_∅ ∅ + Σ c_i e_i` of the `S^1 x S^2` skein module.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct S1S2Element {
    pub empty: BigRational,
    pub e: BTreeMap<usize, BigRational>,
}

impl S1S2Element {
    pub fn is_zero(&self) -> bool {
        self.empty.is_zero() && self.e.is_empty()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.e.get(&i).cloned().unwrap_or_else(BigRational::zero)
    }
}

/// Image of a solid-torus element in `S^1 x S^2` at order `n`.
pub fn s1s2_reduce(p: &Polynomial, n: usize) -> Result<S1S2Element> {
    check_order(n)?;
    let coeffs = a_basis_expand(p);
    let mut out = S1S2Element::default();
    for (i, c) in coeffs.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if i == 0 {
            out.empty = c;
        } else if (i + 2) % n == 0 {
            out.e.insert(i, c);
        }
    }
    Ok(out)
}

/// `p ↦ p ∘ T_N`: the core curve goes to `T_N(x)`.
pub fn torus_frobenius(p: &Polynomial, n: usize) -> Polynomial {
    p.compose(&chebyshev_t(n))
}

/// Matrix of `{reduce(T_{kN}) : 0 <= k <= kmax}` against `{∅, e_{N-2}, ..., e_{kmax N - 2}}`.
///
/// Row `0` is the `∅` coordinate and row `k > 0` the `e_{kN-2}` coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusMatrix {
    pub n: usize,
    pub kmax: usize,
    pub entries: Vec<Vec<BigRational>>,
}

impl FrobeniusMatrix {
    pub fn determinant(&self) -> BigRational {
        let mut a = self.entries.clone();
        let size = a.len();
        let mut det = BigRational::one();
        for c in 0..size {
            let Some(p) = (c..size).find(|&i| !a[i][c].is_zero()) else {
                return BigRational::zero();
            };
            if p != c {
                a.swap(c, p);
                det = -det;
            }
            det *= &a[c][c];
            for i in c + 1..size {
                let f = &a[i][c] / &a[c][c];
                for j in c..size {
                    let sub = &f * &a[c][j];
                    a[i][j] -= sub;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }

    /// True when the matrix is diagonal with `2` in the `∅` slot and `-2` elsewhere.
    pub fn has_expected_shape(&self) -> bool {
        let two = BigRational::from_integer(BigInt::from(2));
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| match (i, j) {
                (0, 0) => *x == two,
                _ if i == j => *x == -two.clone(),
                _ => x.is_zero(),
            })
        })
    }
}

pub fn s1s2_frobenius_matrix(n: usize, kmax: usize) -> Result<FrobeniusMatrix> {
    check_order(n)?;
    if n < 3 {
        return Err(Error::InvalidOrder(n as i64));
    }
    if kmax == 0 {
        return Err(Error::Parse("kmax must be at least 1".into()));
    }
    let size = kmax + 1;
    let mut entries = vec![vec![BigRational::zero(); size]; size];
    for k in 0..size {
        let img = s1s2_reduce(&chebyshev_t(k * n), n)?;
        entries[0][k] = img.empty.clone();
        for (i, c) in img.e {
            let row = (i + 2) / n;
            entries[row][k] = c;
        }
    }
    Ok(FrobeniusMatrix { n, kmax, entries })
}
