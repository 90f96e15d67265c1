//! Quasitoric braids: sign-matrix forms, membership in `QB_n`, and the
//! factorization `β = δ_0^k · p` with `p` pure.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{delta0, BraidWord, Letter, Permutation};
use crate::error::{BraidError, Result};

/// An `m × (n-1)` sign matrix; row `j` stands for
/// `σ_1^{ε_1^j} σ_2^{ε_2^j} ⋯ σ_{n-1}^{ε_{n-1}^j}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuasitoricForm {
    strands: usize,
    rows: Vec<Vec<i8>>,
}

impl QuasitoricForm {
    pub fn new(strands: usize, rows: Vec<Vec<i8>>) -> Result<Self> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        for row in &rows {
            if row.len() != strands - 1 || row.iter().any(|&e| e != 1 && e != -1) {
                return Err(BraidError::Parse(format!("{row:?}")));
            }
        }
        Ok(QuasitoricForm { strands, rows })
    }

    /// The toric form: every sign `+1`.
    pub fn toric(strands: usize, m: usize) -> Result<Self> {
        Self::new(strands, vec![vec![1; strands.saturating_sub(1)]; m])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn to_word(&self) -> BraidWord {
        let letters = self
            .rows
            .iter()
            .flat_map(|row| {
                row.iter().enumerate().map(|(i, &e)| Letter {
                    index: i + 1,
                    sign: e,
                })
            })
            .collect();
        BraidWord::from_letters_unchecked(self.strands, letters)
    }

    /// Reads a word that is literally a sequence of rows `σ_1^± ⋯ σ_{n-1}^±`.
    /// This is a syntactic check, not group membership.
    pub fn parse_word(w: &BraidWord) -> Option<Self> {
        let width = w.strands() - 1;
        if !w.len().is_multiple_of(width) {
            return None;
        }
        let mut rows = Vec::with_capacity(w.len() / width);
        for chunk in w.letters().chunks(width) {
            if chunk.iter().enumerate().any(|(i, l)| l.index != i + 1) {
                return None;
            }
            rows.push(chunk.iter().map(|l| l.sign).collect());
        }
        Some(QuasitoricForm {
            strands: w.strands(),
            rows,
        })
    }

    /// Parses the text format: one row per line, `n-1` characters from `+-`.
    /// Blank lines are skipped.
    pub fn parse_text(strands: usize, text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .chars()
                .map(|c| match c {
                    '+' => Ok(1),
                    '-' => Ok(-1),
                    _ => Err(BraidError::Parse(line.to_string())),
                })
                .collect::<Result<Vec<i8>>>()?;
            if row.len() + 1 != strands {
                return Err(BraidError::Parse(line.to_string()));
            }
            rows.push(row);
        }
        Self::new(strands, rows)
    }

    /// `ρ^m`, the permutation of any word with this shape.
    pub fn expected_perm(&self) -> Permutation {
        Permutation::rho(self.strands).pow(self.m() % self.strands)
    }
}

impl fmt::Display for QuasitoricForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            for &e in row {
                f.write_str(if e > 0 { "+" } else { "-" })?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Least `k ∈ [0, n-1]` with `perm(w) = ρ^k`, if any. `w` lies in `QB_n`
/// exactly when this exists.
pub fn is_quasitoric(w: &BraidWord) -> Option<usize> {
    let n = w.strands();
    let p = w.perm();
    let rho = Permutation::rho(n);
    let mut acc = Permutation::identity(n);
    for k in 0..n {
        if acc == p {
            return Some(k);
        }
        acc = acc.compose(&rho);
    }
    None
}

/// Splits `w ∈ QB_n` as `δ_0^k · p`, returning `k` and the pure word
/// `p = δ_0^{-k} w`.
pub fn factor(w: &BraidWord) -> Result<(usize, BraidWord)> {
    let k = is_quasitoric(w).ok_or(BraidError::NotQuasitoric)?;
    let head = delta0(w.strands())?.pow(-(k as i64));
    let p = head.concat(w)?;
    Ok((k, p))
}
