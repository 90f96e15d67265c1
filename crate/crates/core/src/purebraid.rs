//! Pure braids: linking numbers, Artin combing into `A_{i,j}` atoms, and the
//! change of basis from `A_{i,j}` to the full twists `t_{i,j}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{twist, Atom, BraidWord, GeneratorWord, Letter};
use crate::error::{BraidError, Result};

/// Pairwise linking numbers of a pure braid, in full twists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkingMatrix {
    pub strands: usize,
    /// Upper-triangular rows: `rows[k-1][l-k-1] = lk(k, l)` for `k < l`.
    pub rows: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn zero(n: usize) -> Self {
        LinkingMatrix {
            strands: n,
            rows: (1..n).map(|k| vec![0; n - k]).collect(),
        }
    }

    /// `lk(k, l)` for `1 ≤ k, l ≤ n`, symmetric, zero on the diagonal.
    pub fn get(&self, k: usize, l: usize) -> i64 {
        match k.cmp(&l) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => self.rows[k - 1][l - k - 1],
            std::cmp::Ordering::Greater => self.rows[l - 1][k - l - 1],
        }
    }

    fn add(&mut self, k: usize, l: usize, v: i64) {
        let (a, b) = if k < l { (k, l) } else { (l, k) };
        self.rows[a - 1][b - a - 1] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|&v| v == 0)
    }

    pub fn plus(&self, other: &LinkingMatrix) -> LinkingMatrix {
        assert_eq!(self.strands, other.strands);
        LinkingMatrix {
            strands: self.strands,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }

    /// Exponents of the `t_{i,j}` (lexicographic order of `(i, j)`) in the
    /// abelianization of `PB_n`. Inverts `[t_{i,j}] = Σ_{i≤k<l≤j} [A_{k,l}]`
    /// by inclusion-exclusion; `t_{k,k}` terms vanish.
    pub fn t_exponents(&self) -> Vec<i64> {
        let n = self.strands;
        let mut e = vec![vec![0i64; n + 2]; n + 2];
        for k in 1..n {
            for l in k + 1..=n {
                let v = self.get(k, l);
                if v == 0 {
                    continue;
                }
                e[k][l] += v;
                e[k][l - 1] -= v;
                e[k + 1][l] -= v;
                e[k + 1][l - 1] += v;
            }
        }
        (1..n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| e[i][j])
            .collect()
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("\n")?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

fn require_pure(w: &BraidWord) -> Result<()> {
    if w.is_pure() {
        Ok(())
    } else {
        Err(BraidError::NotPure)
    }
}

pub fn linking(w: &BraidWord) -> Result<LinkingMatrix> {
    require_pure(w)?;
    let n = w.strands();
    // strand labels by starting (top) position
    let mut at: Vec<usize> = (1..=n).collect();
    let mut twice = LinkingMatrix::zero(n);
    for l in w.letters() {
        let (a, b) = (at[l.index - 1], at[l.index]);
        twice.add(a, b, l.sign as i64);
        at.swap(l.index - 1, l.index);
    }
    for v in twice.rows.iter_mut().flatten() {
        debug_assert!(*v % 2 == 0);
        *v /= 2;
    }
    Ok(twice)
}

/// Letter of the free group `⟨A_{1,m}, …, A_{m-1,m}⟩`: `(q, ±1)` is `A_{q,m}^{±1}`.
type FreeLetter = (usize, i8);

fn push_free(word: &mut Vec<FreeLetter>, x: FreeLetter) {
    if let Some(&(q, s)) = word.last() {
        if q == x.0 && s == -x.1 {
            word.pop();
            return;
        }
    }
    word.push(x);
}

/// Applies the conjugation automorphism `x ↦ σ_k^ε x σ_k^{-ε}` of the free
/// subgroup. On generators:
/// `σ_k: A_k ↦ A_{k+1}, A_{k+1} ↦ A_{k+1}^{-1} A_k A_{k+1}`;
/// `σ_k^{-1}: A_k ↦ A_k A_{k+1} A_k^{-1}, A_{k+1} ↦ A_k`; other `A_q` fixed.
fn conjugate_free(word: &[FreeLetter], k: usize, eps: i8) -> Vec<FreeLetter> {
    let mut out = Vec::with_capacity(word.len() + word.len() / 2);
    for &(q, s) in word {
        let image: Vec<FreeLetter> = match (q, eps) {
            (q, 1) if q == k => vec![(k + 1, 1)],
            (q, 1) if q == k + 1 => vec![(k + 1, -1), (k, 1), (k + 1, 1)],
            (q, -1) if q == k => vec![(k, 1), (k + 1, 1), (k, -1)],
            (q, -1) if q == k + 1 => vec![(k, 1)],
            _ => vec![(q, 1)],
        };
        if s > 0 {
            for x in image {
                push_free(&mut out, x);
            }
        } else {
            for (q2, s2) in image.into_iter().rev() {
                push_free(&mut out, (q2, -s2));
            }
        }
    }
    out
}

/// Splits a pure braid on `m` strands as `β · F`, where `β` is a pure braid
/// on the first `m-1` strands and `F` lies in the free group generated by the
/// `A_{q,m}`.
fn peel_last_strand(letters: &[Letter], m: usize) -> (Vec<Letter>, Vec<FreeLetter>) {
    // Strand m sits at position p. Between consecutive letters we insert
    // R_p R_p^{-1} with R_p = σ_p^{-1} ⋯ σ_{m-1}^{-1}, moving that strand to
    // the far right. Each letter then becomes a letter on the other strands
    // or a single A_{q,m}^{±1}.
    let mut p = m;
    let mut beta: Vec<Letter> = Vec::new();
    let mut free: Vec<FreeLetter> = Vec::new();
    for &l in letters {
        let k = l.index;
        if k == p {
            if l.is_positive() {
                push_free(&mut free, (p, 1));
            }
            p += 1;
        } else if k + 1 == p {
            if !l.is_positive() {
                push_free(&mut free, (p - 1, -1));
            }
            p -= 1;
        } else {
            let b = if k < p {
                l
            } else {
                Letter {
                    index: k - 1,
                    sign: l.sign,
                }
            };
            free = conjugate_free(&free, b.index, -b.sign);
            match beta.last() {
                Some(top) if *top == b.inverse() => {
                    beta.pop();
                }
                _ => beta.push(b),
            }
        }
    }
    debug_assert_eq!(p, m, "peeling a non-pure braid");
    (beta, free)
}

/// Artin combing: a word in `A_{i,j}^{±1}` atoms equal to the pure braid `w`.
/// The output lists the `A_{·,2}` block first and the `A_{·,n}` block last.
/// No length bound is promised; the free parts can grow exponentially.
pub fn comb(w: &BraidWord) -> Result<GeneratorWord> {
    require_pure(w)?;
    let mut blocks: Vec<(usize, Vec<FreeLetter>)> = Vec::new();
    let mut current: Vec<Letter> = w.free_reduce().letters().to_vec();
    for m in (2..=w.strands()).rev() {
        let (beta, free) = peel_last_strand(&current, m);
        blocks.push((m, free));
        current = beta;
    }
    debug_assert!(current.is_empty());
    let mut out = GeneratorWord::new();
    for (m, free) in blocks.into_iter().rev() {
        for (q, s) in free {
            out.push(Atom::A(q, m), s as i64);
        }
    }
    Ok(out)
}

/// `A_{i,j} = t_{i,j-1}^{-1} t_{i,j} t_{i+1,j}^{-1} t_{i+1,j-1}` with
/// `t_{k,k} = 1`.
pub fn a_to_t(i: usize, j: usize) -> Result<GeneratorWord> {
    if i < 1 || i >= j {
        return Err(BraidError::InvalidAtom {
            atom: Atom::A(i, j),
            strands: j,
        });
    }
    let mut w = twist(i, j - 1).inverse();
    w.append(&twist(i, j));
    w.append(&twist(i + 1, j).inverse());
    w.append(&twist(i + 1, j - 1));
    Ok(w)
}

/// A word in `t_{i,j}^{±1}` equal to the pure braid `w`.
pub fn t_decompose(w: &BraidWord) -> Result<GeneratorWord> {
    comb(w)?.substitute(|a| match a {
        Atom::A(i, j) => a_to_t(i, j),
        other => Err(BraidError::ForeignAtom(other)),
    })
}
