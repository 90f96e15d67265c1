//! Left-greedy (Garside) normal form in `B_n`, the equality oracle used by
//! every other module.
//!
//! An element is written `Δ^inf · x_1 ⋯ x_r` with each `x_k` a permutation
//! braid (positive, every pair of strands crossing at most once), none equal
//! to `e` or `Δ`, and each pair `(x_k, x_{k+1})` left-weighted: the starting
//! set of `x_{k+1}` lies inside the finishing set of `x_k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter, Permutation};
use crate::error::{BraidError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub inf: i64,
    pub factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Canonical length (number of non-`Δ` factors).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// A braid word for the element: `Δ^inf` followed by a reduced positive
    /// word for each factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = Simple::delta(n).positive_word();
        let mut letters = Vec::new();
        for _ in 0..self.inf.unsigned_abs() {
            if self.inf > 0 {
                letters.extend_from_slice(&delta);
            } else {
                letters.extend(delta.iter().rev().map(|l| l.inverse()));
            }
        }
        for f in &self.factors {
            letters.extend(Simple::from_perm(f).positive_word());
        }
        BraidWord::from_letters_unchecked(n, letters)
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.inf)?;
        for p in &self.factors {
            write!(f, " | {p}")?;
        }
        Ok(())
    }
}

/// Permutation braid with its inverse permutation cached.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Simple {
    p: Vec<usize>,
    inv: Vec<usize>,
}

impl Simple {
    fn identity(n: usize) -> Self {
        let p: Vec<usize> = (0..n).collect();
        Simple { inv: p.clone(), p }
    }

    fn delta(n: usize) -> Self {
        let p: Vec<usize> = (0..n).rev().collect();
        Simple { inv: p.clone(), p }
    }

    fn from_perm(perm: &Permutation) -> Self {
        let p = perm.zero_based().to_vec();
        let mut inv = vec![0; p.len()];
        for (i, &v) in p.iter().enumerate() {
            inv[v] = i;
        }
        Simple { p, inv }
    }

    /// `σ_i` for the positive letter, `Δ σ_i^{-1}` for the negative one.
    fn for_letter(n: usize, l: Letter) -> Self {
        let mut s = if l.is_positive() {
            Simple::identity(n)
        } else {
            Simple::delta(n)
        };
        s.right_mul(l.index - 1);
        s
    }

    fn is_identity(&self) -> bool {
        self.p.iter().enumerate().all(|(i, &v)| i == v)
    }

    fn is_delta(&self) -> bool {
        let n = self.p.len();
        self.p.iter().enumerate().all(|(i, &v)| v == n - 1 - i)
    }

    /// `self · σ_{i+1}` (0-based `i`).
    fn right_mul(&mut self, i: usize) {
        self.p.swap(i, i + 1);
        let (a, b) = (self.p[i], self.p[i + 1]);
        self.inv[a] = i;
        self.inv[b] = i + 1;
    }

    /// `σ_{i+1}^{-1} · self`, assuming `σ_{i+1}` left-divides `self`.
    fn left_div(&mut self, i: usize) {
        self.inv.swap(i, i + 1);
        let (a, b) = (self.inv[i], self.inv[i + 1]);
        self.p[a] = i;
        self.p[b] = i + 1;
    }

    fn in_finishing_set(&self, i: usize) -> bool {
        self.p[i] > self.p[i + 1]
    }

    fn in_starting_set(&self, i: usize) -> bool {
        self.inv[i] > self.inv[i + 1]
    }

    /// Conjugation by `Δ`, sending `σ_i` to `σ_{n-i}`.
    fn flip(&mut self) {
        let n = self.p.len();
        let p: Vec<usize> = (0..n).map(|x| n - 1 - self.p[n - 1 - x]).collect();
        let inv: Vec<usize> = (0..n).map(|x| n - 1 - self.inv[n - 1 - x]).collect();
        self.p = p;
        self.inv = inv;
    }

    /// A reduced positive word, read off by peeling finishing letters.
    fn positive_word(&self) -> Vec<Letter> {
        let mut s = self.clone();
        let mut rev = Vec::new();
        'outer: loop {
            for i in 0..s.p.len() - 1 {
                if s.in_finishing_set(i) {
                    // s = s' σ_{i+1}
                    s.right_mul(i);
                    rev.push(Letter::pos(i + 1));
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        rev
    }

    fn to_perm(&self) -> Permutation {
        Permutation::from_zero_based(self.p.clone())
    }
}

/// Makes `(a, b)` left-weighted without changing `a·b`. Returns whether
/// anything moved.
fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let n = a.p.len();
    let mut moved = false;
    loop {
        let pick = (0..n - 1).find(|&i| b.in_starting_set(i) && !a.in_finishing_set(i));
        match pick {
            Some(i) => {
                a.right_mul(i);
                b.left_div(i);
                moved = true;
            }
            None => return moved,
        }
    }
}

/// Appends a simple factor to a left-weighted factor list and restores
/// left-weightedness by sweeping right to left.
fn push_factor(factors: &mut Vec<Simple>, s: Simple) {
    if s.is_identity() {
        return;
    }
    factors.push(s);
    let mut j = factors.len() - 1;
    while j > 0 {
        let (head, tail) = factors.split_at_mut(j);
        if !left_weight(&mut head[j - 1], &mut tail[0]) {
            break;
        }
        j -= 1;
    }
    while factors.last().is_some_and(Simple::is_identity) {
        factors.pop();
    }
}

pub fn normal_form(w: &BraidWord) -> GarsideNormalForm {
    let n = w.strands();
    let total_neg = w.letters().iter().filter(|l| !l.is_positive()).count();
    // σ_i^{-1} = Δ^{-1}·(Δσ_i^{-1}); every Δ^{-1} is moved to the front, and
    // each simple it passes gets conjugated by Δ. So the factor from a letter
    // is flipped once per negative letter to its right.
    let mut remaining_neg = total_neg;
    let mut factors: Vec<Simple> = Vec::new();
    for &l in w.letters() {
        if !l.is_positive() {
            remaining_neg -= 1;
        }
        let mut s = Simple::for_letter(n, l);
        if remaining_neg % 2 == 1 {
            s.flip();
        }
        push_factor(&mut factors, s);
    }
    let leading_deltas = factors.iter().take_while(|s| s.is_delta()).count();
    debug_assert!(factors.iter().all(|s| !s.is_identity()));
    GarsideNormalForm {
        strands: n,
        inf: leading_deltas as i64 - total_neg as i64,
        factors: factors[leading_deltas..]
            .iter()
            .map(Simple::to_perm)
            .collect(),
    }
}

pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(BraidError::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(normal_form(u) == normal_form(v))
}

pub fn is_trivial(w: &BraidWord) -> bool {
    normal_form(w).is_identity()
}

/// Checks the structural invariants of a normal form: no `e` or `Δ`
/// factors, each factor a permutation, and consecutive pairs left-weighted.
pub fn is_valid_normal_form(nf: &GarsideNormalForm) -> bool {
    let simples: Vec<Simple> = nf.factors.iter().map(Simple::from_perm).collect();
    if simples.iter().any(|s| s.is_identity() || s.is_delta()) {
        return false;
    }
    let n = nf.strands;
    simples
        .windows(2)
        .all(|pair| (0..n - 1).all(|i| !pair[1].in_starting_set(i) || pair[0].in_finishing_set(i)))
}
