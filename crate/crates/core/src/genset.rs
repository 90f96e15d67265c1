//! Rewriting elements of `QB_n` over the two minimal generating sets
//! `{δ_0, t_{1,2}, …, t_{1,N}}` and `{δ_0, δ_1, …, δ_{N-1}}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::{twist, Atom, BraidWord, GeneratorWord};
use crate::error::{BraidError, Result};
use crate::purebraid::t_decompose;
use crate::quasitoric::factor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `δ_0` and `t_{1,j}` for `2 ≤ j ≤ N`.
    Thm41,
    /// `δ_i` for `0 ≤ i ≤ N-1`.
    Thm42,
}

impl FromStr for Variant {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thm41" => Ok(Variant::Thm41),
            "thm42" => Ok(Variant::Thm42),
            _ => Err(BraidError::Parse(s.to_string())),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Thm41 => "thm41",
            Variant::Thm42 => "thm42",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GensetTarget {
    pub variant: Variant,
    pub n: usize,
    pub big_n: usize,
    pub alphabet: Vec<Atom>,
}

/// `(n+1)/2` for odd `n`, `(n+2)/2` for even `n`.
pub fn half_bound(n: usize) -> usize {
    n / 2 + 1
}

impl GensetTarget {
    pub fn new(variant: Variant, n: usize) -> Result<Self> {
        if n < 3 {
            return Err(BraidError::NeedThreeStrands(n));
        }
        let big_n = half_bound(n);
        let alphabet = match variant {
            Variant::Thm41 => std::iter::once(Atom::D0)
                .chain((2..=big_n).map(|j| Atom::T(1, j)))
                .collect(),
            Variant::Thm42 => (0..big_n).map(Atom::Dl).collect(),
        };
        Ok(GensetTarget {
            variant,
            n,
            big_n,
            alphabet,
        })
    }

    /// `D0` and `Dl(0)` name the same element and both pass for either variant
    /// where `δ_0` is allowed.
    pub fn allows(&self, atom: Atom) -> bool {
        let atom = match (self.variant, atom) {
            (Variant::Thm41, Atom::Dl(0)) => Atom::D0,
            (Variant::Thm42, Atom::D0) => Atom::Dl(0),
            (_, a) => a,
        };
        self.alphabet.contains(&atom)
    }

    pub fn confines(&self, w: &GeneratorWord) -> bool {
        w.atoms().all(|a| self.allows(a))
    }
}

/// Memoized rewriting into the first generating set.
#[derive(Debug, Clone)]
pub struct Thm41Rewriter {
    n: usize,
    big_n: usize,
    memo: HashMap<usize, GeneratorWord>,
}

impl Thm41Rewriter {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(BraidError::NeedThreeStrands(n));
        }
        Ok(Thm41Rewriter {
            n,
            big_n: half_bound(n),
            memo: HashMap::new(),
        })
    }

    fn d0(k: i64) -> GeneratorWord {
        GeneratorWord::from_factors([(Atom::D0, k)])
    }

    /// `t_{1,j}` over the target alphabet.
    fn head_twist(&mut self, j: usize, depth: usize) -> GeneratorWord {
        assert!(depth <= self.n, "rewriting depth exceeded for t1,{j}");
        if j < 2 {
            return GeneratorWord::new();
        }
        if j <= self.big_n {
            return GeneratorWord::atom(Atom::T(1, j));
        }
        if let Some(w) = self.memo.get(&j) {
            return w.clone();
        }
        let (n, big_n) = (self.n, self.big_n);
        let w = if j == n {
            Self::d0(n as i64)
        } else if j == n - 1 {
            // t_{1,n-1} = t_{1,N-1} t_{N,n-1} t_{1,n} · δ_0^{-1} t_{1,N}^{-1} δ_0 · t_{N,n}^{-1}
            let mut w = self.twist(1, big_n - 1, depth + 1);
            w.append(&self.twist(big_n, n - 1, depth + 1));
            w.append(&self.twist(1, n, depth + 1));
            w.append(&Self::d0(-1));
            w.append(&self.twist(1, big_n, depth + 1).inverse());
            w.append(&Self::d0(1));
            w.append(&self.twist(big_n, n, depth + 1).inverse());
            w
        } else {
            // t_{1,j} = t_{1,n-1} t_{j+1,n} · δ_0^{-1} t_{1,j+1} δ_0 · t_{1,n}^{-1} t_{j+1,n-1}^{-1}
            let mut w = self.twist(1, n - 1, depth + 1);
            w.append(&self.twist(j + 1, n, depth + 1));
            w.append(&Self::d0(-1));
            w.append(&self.twist(1, j + 1, depth + 1));
            w.append(&Self::d0(1));
            w.append(&self.twist(1, n, depth + 1).inverse());
            w.append(&self.twist(j + 1, n - 1, depth + 1).inverse());
            w
        };
        self.memo.insert(j, w.clone());
        w
    }

    /// `t_{i,j} = δ_0^{i-1} t_{1,j-i+1} δ_0^{-(i-1)}`.
    fn twist(&mut self, i: usize, j: usize, depth: usize) -> GeneratorWord {
        if i >= j {
            return GeneratorWord::new();
        }
        let shift = (i - 1) as i64;
        let mut w = Self::d0(shift);
        w.append(&self.head_twist(j - i + 1, depth));
        w.append(&Self::d0(-shift));
        w
    }

    pub fn rewrite(&mut self, gw: &GeneratorWord) -> Result<GeneratorWord> {
        let n = self.n;
        gw.substitute(|a| match a {
            Atom::D0 | Atom::Dl(0) => Ok(GeneratorWord::atom(Atom::D0)),
            Atom::T(i, j) => {
                a.validate(n)?;
                Ok(self.twist(i, j, 0))
            }
            other => Err(BraidError::ForeignAtom(other)),
        })
    }
}

/// Memoized rewriting from the first generating set into the second.
#[derive(Debug, Clone)]
pub struct Thm42Rewriter {
    n: usize,
    big_n: usize,
    /// `t_{i,n}^{-1}` keyed by `i`.
    memo: HashMap<usize, GeneratorWord>,
}

impl Thm42Rewriter {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(BraidError::NeedThreeStrands(n));
        }
        Ok(Thm42Rewriter {
            n,
            big_n: half_bound(n),
            memo: HashMap::new(),
        })
    }

    fn dl(i: usize, k: i64) -> GeneratorWord {
        GeneratorWord::from_factors([(Atom::Dl(i), k)])
    }

    /// `t_{i,n}^{-1}` for `n-N+1 ≤ i ≤ n-1`.
    fn inverse_tail_twist(&mut self, i: usize, depth: usize) -> GeneratorWord {
        let n = self.n;
        assert!(depth <= n, "rewriting depth exceeded for t{i},{n}");
        debug_assert!(i < n && n - i < self.big_n);
        if let Some(w) = self.memo.get(&i) {
            return w.clone();
        }
        // t_{n-1,n}^{-1} = σ_{n-1}^{-2} = δ_0^{-1} δ_1, and in general
        // t_{i,n}^{-1} = (δ_0^{-1} δ_{n-i}) δ_0^{-1} t_{i+1,n}^{-1} δ_0
        let mut w = Self::dl(0, -1);
        w.append(&Self::dl(n - i, 1));
        if i < n - 1 {
            w.append(&Self::dl(0, -1));
            w.append(&self.inverse_tail_twist(i + 1, depth + 1));
            w.append(&Self::dl(0, 1));
        }
        self.memo.insert(i, w.clone());
        w
    }

    /// `t_{1,j} = δ_0^{-(n-j)} t_{n-j+1,n} δ_0^{n-j}`.
    fn head_twist(&mut self, j: usize) -> GeneratorWord {
        let shift = (self.n - j) as i64;
        let mut w = Self::dl(0, -shift);
        w.append(&self.inverse_tail_twist(self.n - j + 1, 0).inverse());
        w.append(&Self::dl(0, shift));
        w
    }

    pub fn rewrite(&mut self, gw: &GeneratorWord) -> Result<GeneratorWord> {
        let big_n = self.big_n;
        gw.substitute(|a| match a {
            Atom::D0 | Atom::Dl(0) => Ok(GeneratorWord::atom(Atom::Dl(0))),
            Atom::T(1, j) if (2..=big_n).contains(&j) => Ok(self.head_twist(j)),
            other => Err(BraidError::ForeignAtom(other)),
        })
    }
}

/// Rewrites a word over `δ_0` and the `t_{i,j}` into `{δ_0, t_{1,2}, …, t_{1,N}}`.
pub fn rewrite_to_thm41(gw: &GeneratorWord, n: usize) -> Result<GeneratorWord> {
    Thm41Rewriter::new(n)?.rewrite(gw)
}

/// Rewrites a word over `{δ_0, t_{1,2}, …, t_{1,N}}` into `{δ_0, …, δ_{N-1}}`.
pub fn rewrite_to_thm42(gw: &GeneratorWord, n: usize) -> Result<GeneratorWord> {
    Thm42Rewriter::new(n)?.rewrite(gw)
}

/// Writes a quasitoric braid over the generating set of `target`.
pub fn decompose(w: &BraidWord, target: &GensetTarget) -> Result<GeneratorWord> {
    if w.strands() != target.n {
        return Err(BraidError::StrandMismatch {
            left: w.strands(),
            right: target.n,
        });
    }
    let (k, p) = factor(w)?;
    let mut gw = GeneratorWord::from_factors([(Atom::D0, k as i64)]);
    gw.append(&t_decompose(&p)?);
    let out = rewrite_to_thm41(&gw, target.n)?;
    match target.variant {
        Variant::Thm41 => Ok(out),
        Variant::Thm42 => rewrite_to_thm42(&out, target.n),
    }
}

/// The two-sided lantern relator `t_{1,i} t_{2,n} · δ_0 t_{i,n} δ_0^{-1} · (t_{2,i} t_{i+1,n} t_{1,n})^{-1}`
/// for `2 ≤ i ≤ n-1`.
pub fn conjugation_lantern_relator(n: usize, i: usize) -> GeneratorWord {
    let lhs = twist(1, i)
        .concat(&twist(2, n))
        .concat(&GeneratorWord::from_factors([
            (Atom::D0, 1),
            (Atom::T(i, n), 1),
            (Atom::D0, -1),
        ]));
    let rhs = twist(2, i).concat(&twist(i + 1, n)).concat(&twist(1, n));
    lhs.concat(&rhs.inverse())
}

/// `t_{1,n-1} t_{j+1,n} · δ_0^{-1} t_{1,j+1} δ_0 · (t_{1,j} t_{j+1,n-1} t_{1,n})^{-1}`
/// for `2 ≤ j ≤ n-2`.
pub fn descending_lantern_relator(n: usize, j: usize) -> GeneratorWord {
    let lhs = twist(1, n - 1)
        .concat(&twist(j + 1, n))
        .concat(&GeneratorWord::from_factors([(Atom::D0, -1)]))
        .concat(&twist(1, j + 1))
        .concat(&GeneratorWord::from_factors([(Atom::D0, 1)]));
    let rhs = twist(1, j)
        .concat(&twist(j + 1, n - 1))
        .concat(&twist(1, n));
    lhs.concat(&rhs.inverse())
}

/// `σ_{n-1}^{-1} ⋯ σ_i^{-1} σ_i^{-1} ⋯ σ_{n-1}^{-1}` against `δ_0^{-1} δ_{n-i}`,
/// for `1 ≤ i ≤ n-1`, as a braid word that should be trivial.
pub fn delta_ladder_relator(n: usize, i: usize) -> Result<BraidWord> {
    let mut s: Vec<i64> = (i..n).rev().map(|k| -(k as i64)).collect();
    s.extend((i..n).map(|k| -(k as i64)));
    let lhs = BraidWord::from_signed(n, &s)?;
    let rhs = GeneratorWord::from_factors([(Atom::D0, -1), (Atom::Dl(n - i), 1)]).expand(n)?;
    lhs.concat(&rhs.inverse())
}

/// `t_{i,n}^{-1} = (δ_0^{-1} δ_{n-i}) δ_0^{-1} t_{i+1,n}^{-1} δ_0` for `1 ≤ i ≤ n-1`,
/// as a generator-word relator.
pub fn delta_twist_relator(n: usize, i: usize) -> GeneratorWord {
    let rhs = GeneratorWord::from_factors([(Atom::D0, -1), (Atom::Dl(n - i), 1), (Atom::D0, -1)])
        .concat(&twist(i + 1, n).inverse())
        .concat(&GeneratorWord::from_factors([(Atom::D0, 1)]));
    twist(i, n).inverse().concat(&rhs.inverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::delta0;
    use crate::garside::{equal, is_trivial};

    fn gw(s: &str) -> GeneratorWord {
        GeneratorWord::parse(s).unwrap()
    }

    fn same(n: usize, a: &GeneratorWord, b: &GeneratorWord) -> bool {
        equal(&a.expand(n).unwrap(), &b.expand(n).unwrap()).unwrap()
    }

    #[test]
    fn target_alphabets() {
        for n in 3..13 {
            for v in [Variant::Thm41, Variant::Thm42] {
                let t = GensetTarget::new(v, n).unwrap();
                assert_eq!(t.alphabet.len(), t.big_n);
                assert!(n - t.big_n < t.big_n);
            }
        }
        assert_eq!(GensetTarget::new(Variant::Thm41, 5).unwrap().big_n, 3);
        assert_eq!(GensetTarget::new(Variant::Thm41, 6).unwrap().big_n, 4);
        assert!(GensetTarget::new(Variant::Thm42, 2).is_err());
    }

    #[test]
    fn thm41_examples() {
        assert_eq!(
            rewrite_to_thm41(&gw("t2,3"), 5).unwrap(),
            gw("d0 t1,2 d0^-1")
        );
        for n in 3..8 {
            let t = GeneratorWord::atom(Atom::T(1, n));
            assert_eq!(rewrite_to_thm41(&t, n).unwrap(), gw(&format!("d0^{n}")));
        }
        let out = rewrite_to_thm41(&gw("t1,4"), 5).unwrap();
        assert!(GensetTarget::new(Variant::Thm41, 5).unwrap().confines(&out));
        assert!(same(5, &out, &gw("t1,4")));
        assert!(rewrite_to_thm41(&gw("s1"), 5).is_err());
    }

    #[test]
    fn thm42_examples() {
        let n = 5;
        let mut r = Thm42Rewriter::new(n).unwrap();
        assert_eq!(
            r.inverse_tail_twist(n - 1, 0),
            GeneratorWord::from_factors([(Atom::Dl(0), -1), (Atom::Dl(1), 1)])
        );
        assert_eq!(
            rewrite_to_thm42(&gw("d0"), n).unwrap(),
            GeneratorWord::atom(Atom::Dl(0))
        );
        let out = rewrite_to_thm42(&gw("t1,2"), n).unwrap();
        assert!(GensetTarget::new(Variant::Thm42, n).unwrap().confines(&out));
        assert!(same(n, &out, &gw("t1,2")));
        assert!(rewrite_to_thm42(&gw("t1,4"), n).is_err());
    }

    #[test]
    fn every_twist_round_trips() {
        for n in 3..7 {
            let t41 = GensetTarget::new(Variant::Thm41, n).unwrap();
            let t42 = GensetTarget::new(Variant::Thm42, n).unwrap();
            for i in 1..n {
                for j in i + 1..=n {
                    let t = GeneratorWord::atom(Atom::T(i, j));
                    let a = rewrite_to_thm41(&t, n).unwrap();
                    assert!(t41.confines(&a));
                    assert!(same(n, &a, &t), "thm41 t{i},{j} n={n}");
                    let b = rewrite_to_thm42(&a, n).unwrap();
                    assert!(t42.confines(&b));
                    assert!(same(n, &b, &t), "thm42 t{i},{j} n={n}");
                }
            }
        }
    }

    #[test]
    fn decompose_delta0() {
        for n in 3..7 {
            let d = delta0(n).unwrap();
            let t41 = GensetTarget::new(Variant::Thm41, n).unwrap();
            let t42 = GensetTarget::new(Variant::Thm42, n).unwrap();
            assert_eq!(decompose(&d, &t41).unwrap(), gw("d0"));
            assert_eq!(
                decompose(&d, &t42).unwrap(),
                GeneratorWord::atom(Atom::Dl(0))
            );
        }
        let t = GensetTarget::new(Variant::Thm41, 4).unwrap();
        let full = GeneratorWord::atom(Atom::T(1, 4)).expand(4).unwrap();
        assert_eq!(decompose(&full, &t).unwrap(), gw("d0^4"));
        assert!(decompose(&BraidWord::from_signed(4, &[1]).unwrap(), &t).is_err());
    }

    #[test]
    fn lantern_and_delta_relators_hold() {
        for n in 3..8 {
            for i in 2..n {
                assert!(is_trivial(
                    &conjugation_lantern_relator(n, i).expand(n).unwrap()
                ));
            }
            for j in 2..n - 1 {
                assert!(is_trivial(
                    &descending_lantern_relator(n, j).expand(n).unwrap()
                ));
            }
            for i in 1..n {
                assert!(is_trivial(&delta_ladder_relator(n, i).unwrap()));
                assert!(is_trivial(&delta_twist_relator(n, i).expand(n).unwrap()));
            }
        }
    }
}
