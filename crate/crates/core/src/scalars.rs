//! Exact coefficients in `Q(q^{1/2})`.
//!
//! Two modes are supported. In root-of-unity mode `q^{1/2}` is a primitive
//! root of unity `ζ` of odd order `N` and scalars live in the cyclotomic field
//! `Q[t]/Φ_N(t)`. Primitivity is an assumption of this crate: every
//! nonvanishing statement about coefficients (for instance `q^m = 1` iff
//! `N | m`) relies on it. In generic mode `q^{1/2} = v` is a formal variable
//! and scalars are Laurent polynomials in `v` with rational coefficients.
//!
//! Scalars are kept in canonical form at all times (fully reduced modulo
//! `Φ_N`, rationals in lowest terms), so structural equality is equality in
//! the ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which specialisation of `q^{1/2}` a [`ScalarRing`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `q^{1/2}` is a primitive root of unity of the given odd order.
    RootOfUnity(u32),
    /// `q^{1/2}` is a formal Laurent variable.
    Generic,
}

/// Handle to a coefficient ring. Cheap to clone.
#[derive(Clone)]
pub struct ScalarRing {
    inner: Arc<RingInner>,
}

struct RingInner {
    mode: Mode,
    /// Φ_N, low degree first, monic. Empty in generic mode.
    modulus: Vec<BigRational>,
    /// Reduced forms of ζ^r for 0 <= r < N.
    powers: Vec<Vec<BigRational>>,
}

impl fmt::Debug for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarRing({:?})", self.inner.mode)
    }
}

impl PartialEq for ScalarRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.mode == other.inner.mode
    }
}

impl Eq for ScalarRing {}

/// Integer coefficients of the `n`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    // t^n - 1 divided by Φ_d for every proper divisor d of n.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_polynomial(d);
            num = exact_monic_div(&num, &den);
        }
    }
    num
}

fn exact_monic_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

impl ScalarRing {
    /// Builds a ring for the given mode. Even or nonpositive orders are rejected.
    pub fn new(mode: Mode) -> Result<Self> {
        match mode {
            Mode::RootOfUnity(n) => Self::root_of_unity(n as i64),
            Mode::Generic => Ok(Self::generic()),
        }
    }

    pub fn root_of_unity(n: i64) -> Result<Self> {
        if n < 1 || n % 2 == 0 || n > u32::MAX as i64 {
            return Err(Error::InvalidOrder(n));
        }
        let n = n as u32;
        let modulus: Vec<BigRational> = cyclotomic_polynomial(n)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let d = modulus.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![BigRational::zero(); d];
        cur[0] = BigRational::one();
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by t
            let mut next = vec![BigRational::zero(); d + 1];
            for (i, c) in cur.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            reduce_mod(&mut next, &modulus);
            next.truncate(d);
            cur = next;
        }
        Ok(ScalarRing {
            inner: Arc::new(RingInner {
                mode: Mode::RootOfUnity(n),
                modulus,
                powers,
            }),
        })
    }

    pub fn generic() -> Self {
        ScalarRing {
            inner: Arc::new(RingInner {
                mode: Mode::Generic,
                modulus: Vec::new(),
                powers: Vec::new(),
            }),
        }
    }

    pub fn mode(&self) -> Mode {
        self.inner.mode
    }

    /// The order `N` of `q^{1/2}` in root-of-unity mode.
    pub fn order(&self) -> Option<u32> {
        match self.inner.mode {
            Mode::RootOfUnity(n) => Some(n),
            Mode::Generic => None,
        }
    }

    /// Degree of the field over Q (φ(N)); `None` in generic mode.
    pub fn field_degree(&self) -> Option<usize> {
        self.order().map(|_| self.inner.modulus.len() - 1)
    }

    /// Φ_N as integer coefficients, low degree first.
    pub fn modulus(&self) -> Vec<BigInt> {
        self.inner.modulus.iter().map(|c| c.to_integer()).collect()
    }

    pub fn zero(&self) -> Scalar {
        let repr = match self.inner.mode {
            Mode::RootOfUnity(_) => Repr::Cyclo(vec![BigRational::zero(); self.inner.modulus.len() - 1]),
            Mode::Generic => Repr::Laurent(BTreeMap::new()),
        };
        Scalar { ring: self.clone(), repr }
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(BigRational::one())
    }

    pub fn from_integer(&self, n: i64) -> Scalar {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&self, r: BigRational) -> Scalar {
        let mut s = self.zero();
        if r.is_zero() {
            return s;
        }
        match &mut s.repr {
            Repr::Cyclo(v) => v[0] = r,
            Repr::Laurent(m) => {
                m.insert(0, r);
            }
        }
        s
    }

    /// `(q^{1/2})^m`. In root-of-unity mode the exponent is reduced mod `N`.
    pub fn q_half_power(&self, m: i64) -> Scalar {
        match self.inner.mode {
            Mode::RootOfUnity(n) => {
                let r = m.rem_euclid(n as i64) as usize;
                Scalar {
                    ring: self.clone(),
                    repr: Repr::Cyclo(self.inner.powers[r].clone()),
                }
            }
            Mode::Generic => {
                let mut t = BTreeMap::new();
                t.insert(m, BigRational::one());
                Scalar {
                    ring: self.clone(),
                    repr: Repr::Laurent(t),
                }
            }
        }
    }

    /// `q^m`, i.e. `q_half_power(2m)`.
    pub fn q_power(&self, m: i64) -> Scalar {
        self.q_half_power(2 * m)
    }
}

fn reduce_mod(coeffs: &mut Vec<BigRational>, modulus: &[BigRational]) {
    let d = modulus.len() - 1;
    let len = coeffs.len();
    if len <= d {
        coeffs.resize(d, BigRational::zero());
        return;
    }
    for i in (d..len).rev() {
        let c = std::mem::take(&mut coeffs[i]);
        if c.is_zero() {
            continue;
        }
        for j in 0..d {
            if !modulus[j].is_zero() {
                coeffs[i - d + j] -= &c * &modulus[j];
            }
        }
    }
    coeffs.truncate(d);
}

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    Cyclo(Vec<BigRational>),
    Laurent(BTreeMap<i64, BigRational>),
}

/// An element of a [`ScalarRing`].
#[derive(Clone)]
pub struct Scalar {
    ring: ScalarRing,
    repr: Repr,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.repr == other.repr
    }
}

impl Eq for Scalar {}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, &BigRational)> = match &self.repr {
            Repr::Cyclo(v) => v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64, c))
                .collect(),
            Repr::Laurent(m) => m.iter().map(|(e, c)| (*e, c)).collect(),
        };
        if terms.is_empty() {
            return write!(f, "0");
        }
        let var = match self.ring.mode() {
            Mode::RootOfUnity(_) => "z",
            Mode::Generic => "v",
        };
        for (idx, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{}", abs)?,
                (1, true) => write!(f, "{}", var)?,
                (1, false) => write!(f, "{}*{}", abs, var)?,
                (e, true) => write!(f, "{}^{}", var, e)?,
                (e, false) => write!(f, "{}*{}^{}", abs, var, e)?,
            }
        }
        Ok(())
    }
}

impl Scalar {
    pub fn ring(&self) -> &ScalarRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Cyclo(v) => v.iter().all(Zero::is_zero),
            Repr::Laurent(m) => m.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring.one()
    }

    fn check_ring(&self, other: &Scalar) {
        assert!(
            self.ring == other.ring,
            "scalar ring mismatch: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    /// Multiplies by a rational number.
    pub fn scale(&self, r: &BigRational) -> Scalar {
        if r.is_zero() {
            return self.ring.zero();
        }
        let repr = match &self.repr {
            Repr::Cyclo(v) => Repr::Cyclo(v.iter().map(|c| c * r).collect()),
            Repr::Laurent(m) => Repr::Laurent(m.iter().map(|(e, c)| (*e, c * r)).collect()),
        };
        Scalar {
            ring: self.ring.clone(),
            repr,
        }
    }

    /// Multiplicative inverse. Fails on zero, and on non-monomials in generic mode.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.repr {
            Repr::Laurent(m) => {
                if m.len() != 1 {
                    return Err(Error::NotAUnit(self.to_string()));
                }
                let (e, c) = m.iter().next().unwrap();
                let mut t = BTreeMap::new();
                t.insert(-e, c.recip());
                Ok(Scalar {
                    ring: self.ring.clone(),
                    repr: Repr::Laurent(t),
                })
            }
            Repr::Cyclo(v) => {
                let inv = cyclo_inverse(v, &self.ring.inner.modulus);
                Ok(Scalar {
                    ring: self.ring.clone(),
                    repr: Repr::Cyclo(inv),
                })
            }
        }
    }

    /// Integer power; negative exponents go through [`Scalar::inv`].
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.ring.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Returns `s` with `self == q^s`, if one exists. In root-of-unity mode
    /// the smallest nonnegative such `s` is returned.
    pub fn as_q_power(&self) -> Option<i64> {
        match self.ring.mode() {
            Mode::RootOfUnity(n) => (0..n as i64).find(|s| *self == self.ring.q_power(*s)),
            Mode::Generic => match &self.repr {
                Repr::Laurent(m) if m.len() == 1 => {
                    let (e, c) = m.iter().next().unwrap();
                    (c.is_one() && e % 2 == 0).then_some(e / 2)
                }
                _ => None,
            },
        }
    }

    /// Returns `(sign, s)` with `self == sign * q^s`.
    pub fn as_signed_q_power(&self) -> Option<(i8, i64)> {
        if let Some(s) = self.as_q_power() {
            return Some((1, s));
        }
        (-self).as_q_power().map(|s| (-1, s))
    }
}

fn cyclo_inverse(a: &[BigRational], modulus: &[BigRational]) -> Vec<BigRational> {
    // Extended Euclid over Q[t]: find u with a*u + m*w = 1.
    let d = modulus.len() - 1;
    let mut r0 = trim(modulus.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut s0: Vec<BigRational> = Vec::new();
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    // r0 is a nonzero constant because Φ_N is irreducible and a != 0.
    debug_assert_eq!(r0.len(), 1);
    let c = r0[0].recip();
    let mut u: Vec<BigRational> = s0.iter().map(|x| x * &c).collect();
    reduce_mod(&mut u, modulus);
    u.resize(d, BigRational::zero());
    u
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), trim(rem));
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.check_ring(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Cyclo(a), Repr::Cyclo(b)) => Repr::Cyclo(a.iter().zip(b).map(|(x, y)| x + y).collect()),
            (Repr::Laurent(a), Repr::Laurent(b)) => {
                let mut out = a.clone();
                for (e, c) in b {
                    let slot = out.entry(*e).or_insert_with(BigRational::zero);
                    *slot += c;
                    if slot.is_zero() {
                        out.remove(e);
                    }
                }
                Repr::Laurent(out)
            }
            _ => unreachable!("ring check guarantees matching representations"),
        };
        Scalar {
            ring: self.ring.clone(),
            repr,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.check_ring(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Cyclo(a), Repr::Cyclo(b)) => {
                let d = a.len();
                let mut prod = vec![BigRational::zero(); 2 * d - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                reduce_mod(&mut prod, &self.ring.inner.modulus);
                Repr::Cyclo(prod)
            }
            (Repr::Laurent(a), Repr::Laurent(b)) => {
                let mut out: BTreeMap<i64, BigRational> = BTreeMap::new();
                for (ea, ca) in a {
                    for (eb, cb) in b {
                        *out.entry(ea + eb).or_insert_with(BigRational::zero) += ca * cb;
                    }
                }
                out.retain(|_, c| !c.is_zero());
                Repr::Laurent(out)
            }
            _ => unreachable!("ring check guarantees matching representations"),
        };
        Scalar {
            ring: self.ring.clone(),
            repr,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.scale(&-BigRational::one())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl<'a> AddAssign<&'a Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &'a Scalar) {
        *self = &*self + rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_table() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(5), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(9), ints(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(15), ints(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
    }

    #[test]
    fn ring_construction() {
        let r3 = ScalarRing::new(Mode::RootOfUnity(3)).unwrap();
        assert_eq!(r3.modulus(), ints(&[1, 1, 1]));
        let r1 = ScalarRing::root_of_unity(1).unwrap();
        assert_eq!(r1.field_degree(), Some(1));
        assert!(r1.q_half_power(1).is_one());
        assert_eq!(ScalarRing::root_of_unity(4).unwrap_err(), Error::InvalidOrder(4));
        assert!(ScalarRing::root_of_unity(0).is_err());
        assert!(ScalarRing::root_of_unity(-3).is_err());
    }

    #[test]
    fn half_powers_reduce() {
        let r = ScalarRing::root_of_unity(3).unwrap();
        assert!(r.q_half_power(3).is_one());
        assert_eq!(r.q_half_power(4), r.q_half_power(1));
        assert_eq!(r.q_half_power(-1), r.q_half_power(2));
        let g = ScalarRing::generic();
        assert_eq!(g.q_half_power(-2).to_string(), "v^-2");
    }

    #[test]
    fn cyclotomic_identities() {
        let r = ScalarRing::root_of_unity(3).unwrap();
        let z = r.q_half_power(1);
        let z2 = r.q_half_power(2);
        assert!((&(&z + &z2) + &r.one()).is_zero());
        assert_eq!(z.inv().unwrap(), z2);
        assert_eq!(r.zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn inverse_of_general_element() {
        let r = ScalarRing::root_of_unity(7).unwrap();
        let x = &(&r.from_integer(3) + &r.q_half_power(2)) - &r.q_half_power(5);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
    }

    #[test]
    fn generic_units_only() {
        let g = ScalarRing::generic();
        let x = &g.q_half_power(1) + &g.one();
        assert!(matches!(x.inv(), Err(Error::NotAUnit(_))));
        let m = g.q_half_power(3).scale(&BigRational::new(2.into(), 3.into()));
        assert!((&m * &m.inv().unwrap()).is_one());
    }

    #[test]
    fn q_orders() {
        for n in [1u32, 3, 5, 7, 9] {
            let r = ScalarRing::root_of_unity(n as i64).unwrap();
            for m in -20i64..=20 {
                assert!((&r.q_half_power(m) * &r.q_half_power(-m)).is_one());
                assert_eq!(r.q_power(m).is_one(), m % n as i64 == 0, "n={n} m={m}");
            }
            let nn = n as i64;
            assert!(r.q_half_power(2 * nn * nn).is_one());
        }
    }

    #[test]
    fn q_power_recognition() {
        let r = ScalarRing::root_of_unity(5).unwrap();
        assert_eq!(r.q_half_power(1).as_q_power(), Some(3));
        assert_eq!((-r.q_power(2)).as_signed_q_power(), Some((-1, 2)));
        assert_eq!(r.from_integer(2).as_q_power(), None);
        let g = ScalarRing::generic();
        assert_eq!(g.q_power(-3).as_q_power(), Some(-3));
        assert_eq!(g.q_half_power(1).as_q_power(), None);
    }

    #[test]
    fn display() {
        let r = ScalarRing::root_of_unity(5).unwrap();
        let x = &r.from_integer(2) - &r.q_half_power(3);
        assert_eq!(x.to_string(), "2 - z^3");
    }
}
