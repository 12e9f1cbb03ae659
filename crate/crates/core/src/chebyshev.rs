//! Univariate rational polynomials and the Chebyshev families `T_n`, `S_n`, `A_n`.
//!
//! All three families satisfy `Q_n = x Q_{n-1} - Q_{n-2}` (for `A_n` the
//! recursion is `A_n = S_n + A_{n-2}` instead). `T_n` is the one used by the
//! Frobenius map: a closed curve `x` is sent to `T_N(x)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in one variable with exact rational coefficients.
///
/// Stored sparsely; zero coefficients are never kept.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: BTreeMap<usize, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(deg: usize, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(deg, c);
        }
        Polynomial { coeffs }
    }

    /// Builds from integer coefficients, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))))
    }

    /// Builds from rational coefficients, lowest degree first.
    pub fn from_coeffs(cs: impl IntoIterator<Item = BigRational>) -> Self {
        let coeffs = cs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.values().next_back()
    }

    pub fn coeff(&self, deg: usize) -> BigRational {
        self.coeffs.get(&deg).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|(d, a)| (*d, a * c)).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|(d, a)| (d + k, a.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Polynomial composition `self ∘ inner`, evaluated by Horner's rule.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let Some(top) = self.degree() else {
            return Polynomial::zero();
        };
        let mut acc = Polynomial::zero();
        for d in (0..=top).rev() {
            acc = &(&acc * inner) + &Polynomial::constant(self.coeff(d));
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let Some(top) = self.degree() else {
            return BigRational::zero();
        };
        let mut acc = BigRational::zero();
        for d in (0..=top).rev() {
            acc = acc * x + self.coeff(d);
        }
        acc
    }

    fn add_term(&mut self, deg: usize, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(deg).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&deg);
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (d, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            match (*d, abs.is_one()) {
                (0, _) => write!(f, "{}", abs)?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{}x", abs)?,
                (d, true) => write!(f, "x^{}", d)?,
                (d, false) => write!(f, "{}x^{}", abs, d)?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, c);
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out.add_term(da + db, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

fn recurrence(n: usize, seed0: Polynomial, seed1: Polynomial) -> Polynomial {
    if n == 0 {
        return seed0;
    }
    let x = Polynomial::x();
    let (mut prev, mut cur) = (seed0, seed1);
    for _ in 1..n {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Chebyshev polynomial of the first kind: `T_0 = 2`, `T_1 = x`.
pub fn chebyshev_t(n: usize) -> Polynomial {
    recurrence(n, Polynomial::from_ints(&[2]), Polynomial::x())
}

/// Chebyshev polynomial of the second kind: `S_0 = 1`, `S_1 = x`.
pub fn chebyshev_s(n: usize) -> Polynomial {
    recurrence(n, Polynomial::one(), Polynomial::x())
}

/// `A_1 = S_1`, `A_2 = S_2`, `A_n = S_n + A_{n-2}`. Undefined at `n = 0`.
pub fn chebyshev_a(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::UndefinedChebyshevA);
    }
    let mut a = chebyshev_s(if n % 2 == 1 { 1 } else { 2 });
    let mut k = if n % 2 == 1 { 1 } else { 2 };
    while k < n {
        k += 2;
        a = &chebyshev_s(k) + &a;
    }
    Ok(a)
}

/// `p(x) = Σ_{j<N} c_j(T_N(x)) x^j`, stored as the column polynomials `c_j(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebyshevCanonicalForm {
    n: usize,
    cols: Vec<Polynomial>,
}

impl ChebyshevCanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// `c_j(y)` for `0 <= j < N`.
    pub fn cols(&self) -> &[Polynomial] {
        &self.cols
    }

    /// Substitutes `y := T_N(x)` and sums, reproducing the reduced polynomial.
    pub fn resubstitute(&self) -> Polynomial {
        let tn = chebyshev_t(self.n);
        self.cols
            .iter()
            .enumerate()
            .fold(Polynomial::zero(), |acc, (j, c)| &acc + &c.compose(&tn).shift(j))
    }
}

/// Rewrites `p` over the free basis `{x^j T_N(x)^k : 0 <= j < N}`.
///
/// Repeatedly removes the top-degree term `x^{kN+j}` by subtracting the
/// matching multiple of `x^j T_N^k`; the degree strictly drops each round.
pub fn chebyshev_reduce(p: &Polynomial, n: usize) -> Result<ChebyshevCanonicalForm> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::InvalidOrder(n as i64));
    }
    let tn = chebyshev_t(n);
    let mut tn_powers = vec![Polynomial::one()];
    let mut cols = vec![BTreeMap::<usize, BigRational>::new(); n];
    let mut rest = p.clone();
    while let Some(top) = rest.degree() {
        let lead = rest.leading_coefficient().cloned().expect("nonzero polynomial");
        let (k, j) = (top / n, top % n);
        while tn_powers.len() <= k {
            let next = tn_powers.last().unwrap() * &tn;
            tn_powers.push(next);
        }
        rest = &rest - &tn_powers[k].shift(j).scale(&lead);
        *cols[j].entry(k).or_insert_with(BigRational::zero) += &lead;
    }
    let cols = cols
        .into_iter()
        .map(|m| {
            let mut poly = Polynomial::zero();
            for (k, c) in m {
                poly.add_term(k, &c);
            }
            poly
        })
        .collect();
    Ok(ChebyshevCanonicalForm { n, cols })
}
