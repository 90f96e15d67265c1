//! Braid words, permutations, and symbolic generator words.
//!
//! Products read left to right: `concat(u, v)` is `u` stacked on top of `v`.
//! The permutation of a word is defined so that
//! `perm(concat(u, v)) == perm(u).compose(&perm(v))` with ordinary function
//! composition (`(p∘q)(x) = p(q(x))`). Geometrically `perm(w)(x)` is the top
//! position of the strand that ends at bottom position `x`. Under this
//! convention `perm(δ_0)` is the cycle `1↦2, …, n↦1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};

/// A single Artin generator `σ_index^sign`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub index: usize,
    pub sign: i8,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter { index, sign: 1 }
    }

    pub fn neg(index: usize) -> Self {
        Letter { index, sign: -1 }
    }

    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            sign: -self.sign,
        }
    }

    pub fn is_positive(self) -> bool {
        self.sign > 0
    }
}

/// A word in `σ_1^{±1}, …, σ_{n-1}^{±1}` on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<Self> {
        check_strands(strands)?;
        Ok(BraidWord {
            strands,
            letters: Vec::new(),
        })
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        check_strands(strands)?;
        for l in &letters {
            if l.index == 0 || l.index >= strands || (l.sign != 1 && l.sign != -1) {
                return Err(BraidError::IndexOutOfRange {
                    index: l.index as i64 * l.sign as i64,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed indices, `[1, -2]` meaning `σ_1 σ_2^{-1}`.
    pub fn from_signed(strands: usize, signed: &[i64]) -> Result<Self> {
        check_strands(strands)?;
        let mut letters = Vec::with_capacity(signed.len());
        for &s in signed {
            let index = s.unsigned_abs() as usize;
            if s == 0 || index >= strands {
                return Err(BraidError::IndexOutOfRange { index: s, strands });
            }
            letters.push(Letter {
                index,
                sign: if s > 0 { 1 } else { -1 },
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses the whitespace-separated signed-integer grammar (`"1 2 -3"`).
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let mut signed = Vec::new();
        for tok in text.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| BraidError::Parse(tok.to_string()))?;
            signed.push(v);
        }
        Self::from_signed(strands, &signed)
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<Letter>) -> Self {
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed(&self) -> Vec<i64> {
        self.letters
            .iter()
            .map(|l| l.index as i64 * l.sign as i64)
            .collect()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^k`; negative `k` uses the inverse word.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top.index == l.index && top.sign == -l.sign => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn perm(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        // Right-multiplying by a transposition swaps two entries of the image
        // array: (p∘s_i)(x) = p(s_i(x)).
        for l in &self.letters {
            images.swap(l.index - 1, l.index);
        }
        Permutation { images }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign as i64).sum()
    }

    /// Number of link components of the closure (cycles of `perm`).
    pub fn closure_components(&self) -> usize {
        self.perm().cycle_count()
    }

    pub fn is_pure(&self) -> bool {
        self.perm().is_identity()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if l.sign < 0 {
                f.write_str("-")?;
            }
            write!(f, "{}", l.index)?;
        }
        Ok(())
    }
}

fn check_strands(n: usize) -> Result<()> {
    if n < 2 {
        Err(BraidError::TooFewStrands(n))
    } else {
        Ok(())
    }
}

/// `δ_0 = σ_1 σ_2 ⋯ σ_{n-1}`.
pub fn delta0(n: usize) -> Result<BraidWord> {
    toric(n, 1)
}

/// The `(n, m)`-toric braid `(σ_1 ⋯ σ_{n-1})^m`.
pub fn toric(n: usize, m: usize) -> Result<BraidWord> {
    check_strands(n)?;
    let mut letters = Vec::with_capacity(m * (n - 1));
    for _ in 0..m {
        letters.extend((1..n).map(Letter::pos));
    }
    Ok(BraidWord {
        strands: n,
        letters,
    })
}

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return None;
            }
            seen[v - 1] = true;
            out.push(v - 1);
        }
        Some(Permutation { images: out })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    /// The cycle `ρ: i ↦ i+1 (mod n)`.
    pub fn rho(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutation size mismatch");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: usize) -> Permutation {
        let mut acc = Permutation::identity(self.size());
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

/// Symbolic generators with a fixed expansion into Artin generators.
/// Serialized as its token in the generator-word grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// `σ_i`
    S(usize),
    /// `δ_0 = σ_1 ⋯ σ_{n-1}`
    D0,
    /// `δ_i = σ_1 ⋯ σ_{n-i-1} σ_{n-i}^{-1} ⋯ σ_{n-1}^{-1}`; `Dl(0)` equals `D0` as an element.
    Dl(usize),
    /// Full twist of strands `i..=j`.
    T(usize, usize),
    /// Artin pure braid generator: strand `j` loops once around strand `i`.
    A(usize, usize),
}

impl Atom {
    pub fn validate(self, n: usize) -> Result<()> {
        let ok = match self {
            Atom::S(i) => i >= 1 && i < n,
            Atom::D0 => true,
            Atom::Dl(i) => i < n,
            Atom::T(i, j) | Atom::A(i, j) => i >= 1 && i < j && j <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(BraidError::InvalidAtom {
                atom: self,
                strands: n,
            })
        }
    }

    /// The positive expansion of one copy of this atom. Assumes `validate(n)` passed.
    fn expand_once(self, n: usize, out: &mut Vec<Letter>) {
        match self {
            Atom::S(i) => out.push(Letter::pos(i)),
            Atom::D0 => out.extend((1..n).map(Letter::pos)),
            Atom::Dl(i) => {
                out.extend((1..n - i).map(Letter::pos));
                out.extend((n - i..n).map(Letter::neg));
            }
            Atom::T(i, j) => {
                for _ in 0..=(j - i) {
                    out.extend((i..j).map(Letter::pos));
                }
            }
            Atom::A(i, j) => {
                out.extend((i + 1..j).rev().map(Letter::pos));
                out.push(Letter::pos(i));
                out.push(Letter::pos(i));
                out.extend((i + 1..j).map(Letter::neg));
            }
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Atom::S(i) => write!(f, "s{i}"),
            Atom::D0 => write!(f, "d0"),
            Atom::Dl(i) => write!(f, "d{i}"),
            Atom::T(i, j) => write!(f, "t{i},{j}"),
            Atom::A(i, j) => write!(f, "a{i},{j}"),
        }
    }
}

impl Serialize for Atom {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Atom {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let tok = String::deserialize(d)?;
        tok.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for Atom {
    type Err = BraidError;

    /// `d0` parses as [`Atom::D0`]; `d<i>` with `i ≥ 1` as [`Atom::Dl`].
    fn from_str(tok: &str) -> Result<Self> {
        let bad = || BraidError::Parse(tok.to_string());
        let parse_num = |s: &str| -> Result<usize> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            s.parse().map_err(|_| bad())
        };
        let parse_pair = |s: &str| -> Result<(usize, usize)> {
            let (a, b) = s.split_once(',').ok_or_else(bad)?;
            Ok((parse_num(a)?, parse_num(b)?))
        };
        let mut chars = tok.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        match head {
            's' => Ok(Atom::S(parse_num(rest)?)),
            'd' => match parse_num(rest)? {
                0 => Ok(Atom::D0),
                i => Ok(Atom::Dl(i)),
            },
            't' => {
                let (i, j) = parse_pair(rest)?;
                Ok(Atom::T(i, j))
            }
            'a' => {
                let (i, j) = parse_pair(rest)?;
                Ok(Atom::A(i, j))
            }
            _ => Err(bad()),
        }
    }
}

/// A word `atom_1^{e_1} ⋯ atom_k^{e_k}` with nonzero integer exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorWord {
    factors: Vec<(Atom, i64)>,
}

impl GeneratorWord {
    pub fn new() -> Self {
        GeneratorWord {
            factors: Vec::new(),
        }
    }

    pub fn atom(atom: Atom) -> Self {
        GeneratorWord {
            factors: vec![(atom, 1)],
        }
    }

    /// Builds a word from factors, merging neighbours and dropping zero exponents.
    pub fn from_factors<I: IntoIterator<Item = (Atom, i64)>>(factors: I) -> Self {
        let mut w = GeneratorWord::new();
        for (a, e) in factors {
            w.push(a, e);
        }
        w
    }

    pub fn factors(&self) -> &[(Atom, i64)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of `(atom, exponent)` factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// Total number of atom occurrences, counting `|exponent|`.
    pub fn syllable_weight(&self) -> u64 {
        self.factors.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    /// Appends `atom^exp`, merging with the last factor when the atoms agree.
    pub fn push(&mut self, atom: Atom, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.factors.last_mut() {
            if last.0 == atom {
                last.1 += exp;
                if last.1 == 0 {
                    self.factors.pop();
                }
                return;
            }
        }
        self.factors.push((atom, exp));
    }

    pub fn append(&mut self, other: &GeneratorWord) {
        for &(a, e) in &other.factors {
            self.push(a, e);
        }
    }

    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        let mut w = self.clone();
        w.append(other);
        w
    }

    pub fn inverse(&self) -> GeneratorWord {
        GeneratorWord {
            factors: self.factors.iter().rev().map(|&(a, e)| (a, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> GeneratorWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = GeneratorWord::new();
        for _ in 0..k.unsigned_abs() {
            w.append(&base);
        }
        w
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.factors.iter().map(|&(a, _)| a)
    }

    /// Substitutes every atom with a word, respecting exponents.
    pub fn substitute<F>(&self, mut f: F) -> Result<GeneratorWord>
    where
        F: FnMut(Atom) -> Result<GeneratorWord>,
    {
        let mut out = GeneratorWord::new();
        for &(a, e) in &self.factors {
            let image = f(a)?;
            out.append(&image.pow(e));
        }
        Ok(out)
    }

    /// The Artin-generator word this symbolic word stands for.
    pub fn expand(&self, n: usize) -> Result<BraidWord> {
        check_strands(n)?;
        let mut letters = Vec::new();
        let mut once = Vec::new();
        for &(a, e) in &self.factors {
            a.validate(n)?;
            once.clear();
            a.expand_once(n, &mut once);
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    letters.extend_from_slice(&once);
                } else {
                    letters.extend(once.iter().rev().map(|l| l.inverse()));
                }
            }
        }
        Ok(BraidWord {
            strands: n,
            letters,
        })
    }

    /// Parses the token grammar: `s<i>`, `d<i>`, `t<i>,<j>`, `a<i>,<j>`, each with
    /// an optional `^<k>` exponent, separated by whitespace.
    pub fn parse(text: &str) -> Result<Self> {
        let mut w = GeneratorWord::new();
        for tok in text.split_whitespace() {
            let (body, exp) = match tok.split_once('^') {
                Some((b, e)) => {
                    let k: i64 = e.parse().map_err(|_| BraidError::Parse(tok.to_string()))?;
                    if k == 0 {
                        return Err(BraidError::Parse(tok.to_string()));
                    }
                    (b, k)
                }
                None => (tok, 1),
            };
            let atom: Atom = body
                .parse()
                .map_err(|_| BraidError::Parse(tok.to_string()))?;
            if let Atom::T(i, j) | Atom::A(i, j) = atom {
                if i >= j {
                    return Err(BraidError::Parse(tok.to_string()));
                }
            }
            w.factors.push((atom, exp));
        }
        Ok(w)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (a, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// `t_{i,j}`, with `t_{i,i}` (and the empty span `i > j`) read as the identity.
pub(crate) fn twist(i: usize, j: usize) -> GeneratorWord {
    if i >= j {
        GeneratorWord::new()
    } else {
        GeneratorWord::atom(Atom::T(i, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn concat_examples() {
        let s1 = w(3, &[1]);
        let e = BraidWord::identity(3).unwrap();
        assert_eq!(s1.concat(&e).unwrap(), s1);
        assert!(s1.concat(&s1.inverse()).unwrap().free_reduce().is_empty());
        let d = delta0(3).unwrap();
        assert_eq!(d.concat(&d).unwrap().signed(), vec![1, 2, 1, 2]);
        assert_eq!(
            s1.concat(&w(4, &[1])).unwrap_err(),
            BraidError::StrandMismatch { left: 3, right: 4 }
        );
    }

    #[test]
    fn free_reduce_examples() {
        assert!(w(2, &[1, -1]).free_reduce().is_empty());
        assert_eq!(w(3, &[1, 2, -2, 1]).free_reduce().signed(), vec![1, 1]);
        let r = w(4, &[1, 3, -2]);
        assert_eq!(r.free_reduce(), r);
        // cascading cancellation
        assert!(w(3, &[1, 2, -2, -1]).free_reduce().is_empty());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w(3, &[1, 2]).inverse().signed(), vec![-2, -1]);
        assert!(BraidWord::identity(3).unwrap().inverse().is_empty());
        assert_eq!(delta0(4).unwrap().inverse().signed(), vec![-3, -2, -1]);
    }

    #[test]
    fn perm_examples() {
        assert_eq!(w(3, &[1]).perm().one_line(), vec![2, 1, 3]);
        for n in 2..9 {
            let rho = delta0(n).unwrap().perm();
            assert_eq!(rho, Permutation::rho(n));
            for x in 1..n {
                assert_eq!(rho.apply(x), x + 1);
            }
            assert_eq!(rho.apply(n), 1);
        }
        assert!(BraidWord::identity(5).unwrap().perm().is_identity());
    }

    #[test]
    fn exponent_sum_examples() {
        for n in 2..8 {
            assert_eq!(delta0(n).unwrap().exponent_sum(), n as i64 - 1);
        }
        assert_eq!(w(2, &[1, -1]).exponent_sum(), 0);
    }

    #[test]
    fn full_twist_letter_count_matches_linking_sum() {
        // Each pair of strands in a full twist crosses twice, so the letter
        // count is 2 * C(m, 2) with m = j - i + 1.
        for n in 2..8 {
            for i in 1..n {
                for j in i + 1..=n {
                    let t = GeneratorWord::atom(Atom::T(i, j)).expand(n).unwrap();
                    let m = (j - i + 1) as i64;
                    assert_eq!(t.exponent_sum(), (j - i + 1) as i64 * (j - i) as i64);
                    assert_eq!(t.exponent_sum(), 2 * (m * (m - 1) / 2));
                    assert!(t.is_pure());
                }
            }
        }
    }

    #[test]
    fn expand_examples() {
        let t = GeneratorWord::atom(Atom::T(2, 3)).expand(4).unwrap();
        assert_eq!(t.signed(), vec![2, 2]);
        let a = GeneratorWord::atom(Atom::A(1, 3)).expand(3).unwrap();
        assert_eq!(a.signed(), vec![2, 1, 1, -2]);
        let d = GeneratorWord::atom(Atom::Dl(0)).expand(5).unwrap();
        assert_eq!(d, delta0(5).unwrap());
        let d1 = GeneratorWord::atom(Atom::Dl(1)).expand(4).unwrap();
        assert_eq!(d1.signed(), vec![1, 2, -3]);
        let d3 = GeneratorWord::atom(Atom::Dl(3)).expand(4).unwrap();
        assert_eq!(d3.signed(), vec![-1, -2, -3]);
        assert!(matches!(
            GeneratorWord::atom(Atom::T(2, 5)).expand(4),
            Err(BraidError::InvalidAtom { .. })
        ));
        assert!(GeneratorWord::atom(Atom::Dl(4)).expand(4).is_err());
    }

    #[test]
    fn expand_respects_inverses() {
        let atoms = [
            Atom::S(2),
            Atom::D0,
            Atom::Dl(2),
            Atom::T(1, 4),
            Atom::A(2, 4),
        ];
        for a in atoms {
            let pos = GeneratorWord::atom(a).expand(5).unwrap();
            let neg = GeneratorWord::from_factors([(a, -1)]).expand(5).unwrap();
            assert_eq!(neg, pos.inverse());
            let cubed = GeneratorWord::from_factors([(a, 3)]).expand(5).unwrap();
            assert_eq!(cubed, pos.pow(3));
        }
    }

    #[test]
    fn toric_examples() {
        assert_eq!(
            toric(4, 3).unwrap().signed(),
            vec![1, 2, 3, 1, 2, 3, 1, 2, 3]
        );
        assert!(toric(5, 0).unwrap().is_empty());
        assert_eq!(toric(6, 1).unwrap(), delta0(6).unwrap());
    }

    #[test]
    fn closure_components_examples() {
        assert_eq!(toric(4, 2).unwrap().closure_components(), 2);
        assert_eq!(w(4, &[1, 1, 3, -3]).closure_components(), 4);
        assert_eq!(delta0(7).unwrap().closure_components(), 1);
        // β(n, m) closes to gcd(n, m) components
        for n in 2..9usize {
            for m in 0..12usize {
                let g = num_integer::gcd(n, m);
                assert_eq!(toric(n, m).unwrap().closure_components(), g);
            }
        }
    }

    #[test]
    fn word_grammar() {
        let b = BraidWord::parse(4, "1 2 -3").unwrap();
        assert_eq!(b.signed(), vec![1, 2, -3]);
        assert_eq!(b.to_string(), "1 2 -3");
        assert!(BraidWord::parse(4, "1 0").is_err());
        assert!(BraidWord::parse(4, "4").is_err());
        assert!(BraidWord::parse(4, "x").is_err());
        assert!(BraidWord::parse(1, "").is_err());

        let g = GeneratorWord::parse("t1,4^-2 d0 d3 s2^3 a1,2").unwrap();
        assert_eq!(
            g.factors(),
            &[
                (Atom::T(1, 4), -2),
                (Atom::D0, 1),
                (Atom::Dl(3), 1),
                (Atom::S(2), 3),
                (Atom::A(1, 2), 1)
            ]
        );
        assert_eq!(g.to_string(), "t1,4^-2 d0 d3 s2^3 a1,2");
        for bad in [
            "t1", "t2,2", "t3,1", "x1", "s", "s1^0", "s1^", "t1,,2", "d-1",
        ] {
            assert!(GeneratorWord::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn generator_word_push_merges() {
        let mut g = GeneratorWord::new();
        g.push(Atom::D0, 2);
        g.push(Atom::D0, -2);
        assert!(g.is_empty());
        g.push(Atom::T(1, 2), 1);
        g.push(Atom::D0, 1);
        g.push(Atom::D0, -1);
        g.push(Atom::T(1, 2), 1);
        assert_eq!(g.factors(), &[(Atom::T(1, 2), 2)]);
    }
}
