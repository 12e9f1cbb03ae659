//! Word rewriting for `O_q(SL2)` directly from its presentation.
//!
//! Adjacent pairs are rewritten one at a time with the seven defining
//! relations until every word has the shape `a^* b^* c^*` or `d^* b^* c^*`.
//! This is deliberately independent of the closed-form product in
//! [`super::pbw`] so the two can be checked against each other.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::scalars::{Scalar, ScalarRing};

use super::pbw::{OqElement, PbwIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    B,
    C,
    D,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::A, Generator::B, Generator::C, Generator::D];

    pub fn symbol(self) -> char {
        match self {
            Generator::A => 'a',
            Generator::B => 'b',
            Generator::C => 'c',
            Generator::D => 'd',
        }
    }

    /// The PBW index of the generator itself.
    pub fn index(self) -> PbwIndex {
        match self {
            Generator::A => PbwIndex::new(1, 0, 0, 0),
            Generator::D => PbwIndex::new(0, 1, 0, 0),
            Generator::B => PbwIndex::new(0, 0, 1, 0),
            Generator::C => PbwIndex::new(0, 0, 0, 1),
        }
    }
}

/// A word in the generators `a, b, c, d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GeneratorWord(pub Vec<Generator>);

impl GeneratorWord {
    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    /// `a^{k1} d^{k2} b^{k3} c^{k4}` spelled out letter by letter.
    pub fn from_index(k: PbwIndex) -> Self {
        let mut w = Vec::new();
        w.extend(std::iter::repeat_n(Generator::A, k.a as usize));
        w.extend(std::iter::repeat_n(Generator::D, k.d as usize));
        w.extend(std::iter::repeat_n(Generator::B, k.b as usize));
        w.extend(std::iter::repeat_n(Generator::C, k.c as usize));
        GeneratorWord(w)
    }

    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        GeneratorWord(w)
    }

    /// Every word of exactly `len` letters.
    pub fn all_of_length(len: usize) -> Vec<GeneratorWord> {
        let mut out = vec![GeneratorWord::default()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    Generator::ALL.iter().map(move |g| {
                        let mut v = w.0.clone();
                        v.push(*g);
                        GeneratorWord(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .map(|ch| match ch {
                'a' => Ok(Generator::A),
                'b' => Ok(Generator::B),
                'c' => Ok(Generator::C),
                'd' => Ok(Generator::D),
                other => Err(Error::Parse(format!("unknown generator '{other}'"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(GeneratorWord)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for g in &self.0 {
            write!(f, "{}", g.symbol())?;
        }
        Ok(())
    }
}

/// Which redex to rewrite first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

use Generator::{A, B, C, D};

/// Replacement for an out-of-order adjacent pair, or `None` if the pair is allowed.
fn rule(ring: &ScalarRing, x: Generator, y: Generator) -> Option<Vec<(Scalar, Vec<Generator>)>> {
    let r = match (x, y) {
        (B, A) => vec![(ring.q_power(2), vec![A, B])],
        (C, A) => vec![(ring.q_power(2), vec![A, C])],
        (B, D) => vec![(ring.q_power(-2), vec![D, B])],
        (C, D) => vec![(ring.q_power(-2), vec![D, C])],
        (C, B) => vec![(ring.one(), vec![B, C])],
        (D, A) => vec![(ring.one(), vec![]), (ring.q_power(2), vec![B, C])],
        (A, D) => vec![(ring.one(), vec![]), (ring.q_power(-2), vec![B, C])],
        _ => return None,
    };
    Some(r)
}

fn find_redex(ring: &ScalarRing, w: &[Generator], strategy: Strategy) -> Option<usize> {
    let is_redex = |i: usize| rule(ring, w[i], w[i + 1]).is_some();
    let n = w.len();
    if n < 2 {
        return None;
    }
    match strategy {
        Strategy::Leftmost => (0..n - 1).find(|&i| is_redex(i)),
        Strategy::Rightmost => (0..n - 1).rev().find(|&i| is_redex(i)),
    }
}

fn normal_index(w: &[Generator]) -> PbwIndex {
    let mut k = PbwIndex::ZERO;
    for g in w {
        match g {
            A => k.a += 1,
            D => k.d += 1,
            B => k.b += 1,
            C => k.c += 1,
        }
    }
    k
}

/// Normal form of a linear combination of words, rewriting with `strategy`.
pub fn normal_form_combination(
    ring: &ScalarRing,
    combination: impl IntoIterator<Item = (Scalar, GeneratorWord)>,
    strategy: Strategy,
) -> OqElement {
    let mut pending: BTreeMap<Vec<Generator>, Scalar> = BTreeMap::new();
    let push = |pending: &mut BTreeMap<Vec<Generator>, Scalar>, w: Vec<Generator>, c: Scalar| {
        if c.is_zero() {
            return;
        }
        match pending.get_mut(&w) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    pending.remove(&w);
                }
            }
            None => {
                pending.insert(w, c);
            }
        }
    };
    for (c, w) in combination {
        push(&mut pending, w.0, c);
    }
    let mut out = OqElement::zero(ring);
    // Longest words first so that shorter descendants get merged before they are expanded.
    while let Some(w) = pending.keys().max_by_key(|w| w.len()).cloned() {
        let c = pending.remove(&w).expect("key present");
        match find_redex(ring, &w, strategy) {
            None => out.add_term(normal_index(&w), c),
            Some(i) => {
                for (s, rep) in rule(ring, w[i], w[i + 1]).expect("redex has a rule") {
                    let mut nw = Vec::with_capacity(w.len());
                    nw.extend_from_slice(&w[..i]);
                    nw.extend_from_slice(&rep);
                    nw.extend_from_slice(&w[i + 2..]);
                    push(&mut pending, nw, &c * &s);
                }
            }
        }
    }
    out
}

/// Normal form of a single word, rewriting leftmost redexes first.
pub fn normal_form(ring: &ScalarRing, word: &GeneratorWord) -> OqElement {
    normal_form_with(ring, word, Strategy::Leftmost)
}

pub fn normal_form_with(ring: &ScalarRing, word: &GeneratorWord, strategy: Strategy) -> OqElement {
    normal_form_combination(ring, [(ring.one(), word.clone())], strategy)
}

/// Normal form of `a^{k1} d^{k2} b^{k3} c^{k4}` obtained by rewriting the word.
pub fn monomial_by_rewriting(ring: &ScalarRing, k: PbwIndex) -> OqElement {
    normal_form(ring, &GeneratorWord::from_index(k))
}
