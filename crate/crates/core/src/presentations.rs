//! Presentations of `PB_n`, `QB_n` and `PMod_{0,n+1}` by full twists, their
//! verification against the normal-form oracle, and first homology by Smith
//! normal form.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::braid::{twist, Atom, BraidWord, GeneratorWord};
use crate::error::{BraidError, Result};
use crate::garside::is_trivial;
use crate::purebraid::linking;
use crate::quasitoric::factor;
use crate::snf::smith_normal_form;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Pb,
    Qb,
    Pmod,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Pb => "pb",
            Group::Qb => "qb",
            Group::Pmod => "pmod",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelatorFamily {
    /// `t_{i,j} t_{k,l} = t_{k,l} t_{i,j}` for separated or nested spans.
    Commute,
    /// The five-term relation for `1 ≤ i < j < k < l < m ≤ n`.
    Pentagonal,
    /// `δ_0^n = t_{1,n}`.
    FullTwist,
    /// `δ_0 t_{i,j} δ_0^{-1} = t_{i+1,j+1}` for `j < n`.
    ConjugateShift,
    /// `δ_0 t_{1,n} δ_0^{-1} = t_{1,n}`.
    ConjugateCentral,
    /// `δ_0 t_{i,n} δ_0^{-1} = t_{2,n}^{-1} t_{1,i}^{-1} t_{2,i} t_{i+1,n} t_{1,n}` for `i > 1`.
    ConjugateLantern,
}

/// A relator `LHS · RHS^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relator {
    pub family: RelatorFamily,
    pub word: GeneratorWord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub group: Group,
    pub strands: usize,
    pub generators: Vec<Atom>,
    pub relators: Vec<Relator>,
}

impl Presentation {
    pub fn count(&self, family: RelatorFamily) -> usize {
        self.relators.iter().filter(|r| r.family == family).count()
    }
}

fn need_three(n: usize) -> Result<()> {
    if n < 3 {
        Err(BraidError::NeedThreeStrands(n))
    } else {
        Ok(())
    }
}

fn spans(n: usize) -> Vec<(usize, usize)> {
    (1..n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

/// Whether the pair satisfies `j < k`, `k ≤ i < j ≤ l`, or `l < i`.
fn commute_condition((i, j): (usize, usize), (k, l): (usize, usize)) -> bool {
    j < k || (k <= i && j <= l) || l < i
}

fn commute_relators(n: usize, skip: Option<(usize, usize)>) -> Vec<Relator> {
    let all = spans(n);
    let mut out = Vec::new();
    for (x, &a) in all.iter().enumerate() {
        for &b in &all[x + 1..] {
            if Some(a) == skip || Some(b) == skip {
                continue;
            }
            if commute_condition(a, b) || commute_condition(b, a) {
                let ta = twist(a.0, a.1);
                let tb = twist(b.0, b.1);
                let word = ta.concat(&tb).concat(&ta.inverse()).concat(&tb.inverse());
                out.push(Relator {
                    family: RelatorFamily::Commute,
                    word,
                });
            }
        }
    }
    out
}

fn pentagonal_relators(n: usize) -> Vec<Relator> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    for m in l + 1..=n {
                        let lhs = GeneratorWord::new()
                            .concat(&twist(j, m - 1).inverse())
                            .concat(&twist(k, m - 1))
                            .concat(&twist(j, l - 1))
                            .concat(&twist(i, k - 1))
                            .concat(&twist(i, l - 1).inverse());
                        let rhs = GeneratorWord::new()
                            .concat(&twist(i, l - 1).inverse())
                            .concat(&twist(i, k - 1))
                            .concat(&twist(j, l - 1))
                            .concat(&twist(k, m - 1))
                            .concat(&twist(j, m - 1).inverse());
                        out.push(Relator {
                            family: RelatorFamily::Pentagonal,
                            word: lhs.concat(&rhs.inverse()),
                        });
                    }
                }
            }
        }
    }
    out
}

fn t_generators(n: usize) -> Vec<Atom> {
    spans(n).into_iter().map(|(i, j)| Atom::T(i, j)).collect()
}

pub fn pb_relators(n: usize) -> Result<Presentation> {
    need_three(n)?;
    let mut relators = commute_relators(n, None);
    relators.extend(pentagonal_relators(n));
    Ok(Presentation {
        group: Group::Pb,
        strands: n,
        generators: t_generators(n),
        relators,
    })
}

/// The right-hand side of the `δ_0`-conjugation relation for `t_{i,j}`.
pub fn delta0_conjugate_of_twist(n: usize, i: usize, j: usize) -> GeneratorWord {
    if (i, j) == (1, n) {
        twist(1, n)
    } else if j < n {
        twist(i + 1, j + 1)
    } else {
        twist(2, n)
            .inverse()
            .concat(&twist(1, i).inverse())
            .concat(&twist(2, i))
            .concat(&twist(i + 1, n))
            .concat(&twist(1, n))
    }
}

pub fn qb_relators(n: usize) -> Result<Presentation> {
    need_three(n)?;
    let mut p = pb_relators(n)?;
    p.group = Group::Qb;
    p.generators.insert(0, Atom::D0);
    p.relators.push(Relator {
        family: RelatorFamily::FullTwist,
        word: GeneratorWord::from_factors([(Atom::D0, n as i64)]).concat(&twist(1, n).inverse()),
    });
    for (i, j) in spans(n) {
        let family = if (i, j) == (1, n) {
            RelatorFamily::ConjugateCentral
        } else if j < n {
            RelatorFamily::ConjugateShift
        } else {
            RelatorFamily::ConjugateLantern
        };
        let lhs = GeneratorWord::from_factors([(Atom::D0, 1), (Atom::T(i, j), 1), (Atom::D0, -1)]);
        let rhs = delta0_conjugate_of_twist(n, i, j);
        p.relators.push(Relator {
            family,
            word: lhs.concat(&rhs.inverse()),
        });
    }
    Ok(p)
}

/// Relators of `PMod_{0,n+1}`: the `PB_n` families without `t_{1,n}`.
/// They hold only in the mapping class group quotient, so they are used for
/// abelianization and never expanded to braids.
pub fn pmod_relators(n: usize) -> Result<Presentation> {
    need_three(n)?;
    let mut relators = commute_relators(n, Some((1, n)));
    relators.extend(pentagonal_relators(n));
    let generators = t_generators(n)
        .into_iter()
        .filter(|&a| a != Atom::T(1, n))
        .collect();
    Ok(Presentation {
        group: Group::Pmod,
        strands: n,
        generators,
        relators,
    })
}

pub fn presentation(group: Group, n: usize) -> Result<Presentation> {
    match group {
        Group::Pb => pb_relators(n),
        Group::Qb => qb_relators(n),
        Group::Pmod => pmod_relators(n),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorFailure {
    pub index: usize,
    pub relator: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub group: Group,
    pub strands: usize,
    pub checked: usize,
    pub failures: Vec<RelatorFailure>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Expands every relator and checks that it is the trivial braid. Relators are
/// independent, so they are split across threads; the report keeps
/// enumeration order.
pub fn verify(p: &Presentation) -> Result<VerifyReport> {
    if p.group == Group::Pmod {
        return Err(BraidError::Unsupported(
            "PMod relators do not hold in the braid group",
        ));
    }
    let n = p.strands;
    let words: Vec<BraidWord> = p
        .relators
        .iter()
        .map(|r| r.word.expand(n))
        .collect::<Result<_>>()?;
    let threads = std::thread::available_parallelism()
        .map(|t| t.get())
        .unwrap_or(1)
        .min(words.len().max(1));
    let chunk = words.len().div_ceil(threads).max(1);
    let trivial: Vec<bool> = std::thread::scope(|s| {
        let handles: Vec<_> = words
            .chunks(chunk)
            .map(|c| s.spawn(move || c.iter().map(is_trivial).collect::<Vec<bool>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification worker panicked"))
            .collect()
    });
    let failures = trivial
        .iter()
        .enumerate()
        .filter(|(_, &ok)| !ok)
        .map(|(index, _)| RelatorFailure {
            index,
            relator: p.relators[index].word.to_string(),
        })
        .collect();
    Ok(VerifyReport {
        group: p.group,
        strands: n,
        checked: words.len(),
        failures,
    })
}

/// Serializes big integers as JSON numbers when they fit in `i64`, and as
/// decimal strings otherwise.
mod bigint_list {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(i64),
        Big(String),
    }

    fn to_repr(v: &BigInt) -> Repr {
        match v.to_i64() {
            Some(x) => Repr::Small(x),
            None => Repr::Big(v.to_string()),
        }
    }

    fn from_repr<E: serde::de::Error>(r: Repr) -> Result<BigInt, E> {
        match r {
            Repr::Small(x) => Ok(BigInt::from(x)),
            Repr::Big(s) => s.parse().map_err(E::custom),
        }
    }

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(to_repr).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(from_repr)
            .collect()
    }

    pub mod nested {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
            v.iter()
                .map(|row| row.iter().map(to_repr).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
            Vec::<Vec<Repr>>::deserialize(d)?
                .into_iter()
                .map(|row| row.into_iter().map(from_repr).collect())
                .collect()
        }
    }
}

/// `H_1 ≅ Z^rank ⊕ Z_{d_1} ⊕ ⋯` together with the coordinate change that maps
/// generator-exponent vectors to canonical coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianStructure {
    pub group: Group,
    pub strands: usize,
    pub generators: Vec<Atom>,
    pub rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    #[serde(with = "bigint_list")]
    pub torsion: Vec<BigInt>,
    /// All nonzero invariant factors, including the units.
    #[serde(with = "bigint_list")]
    pub diagonal: Vec<BigInt>,
    /// Column transform `V`: the canonical coordinates of an exponent row
    /// vector `x` are `x · V`.
    #[serde(with = "bigint_list::nested")]
    pub transform: Vec<Vec<BigInt>>,
}

/// A homology class in canonical coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassVector {
    #[serde(with = "bigint_list")]
    pub free: Vec<BigInt>,
    /// Residues in `[0, d_i)`, aligned with [`AbelianStructure::torsion`].
    #[serde(with = "bigint_list")]
    pub torsion: Vec<BigInt>,
}

impl ClassVector {
    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(|v| v.is_zero())
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "free=[{}] torsion=[{}]",
            join(&self.free),
            join(&self.torsion)
        )
    }
}

impl AbelianStructure {
    pub fn describe(&self) -> String {
        let t: Vec<String> = self.torsion.iter().map(|d| d.to_string()).collect();
        format!("rank={} torsion=[{}]", self.rank, t.join(","))
    }

    /// Coordinates of the class whose exponent vector (over `generators`) is `x`.
    pub fn classify(&self, x: &[BigInt]) -> ClassVector {
        assert_eq!(x.len(), self.generators.len(), "exponent vector length");
        let g = self.generators.len();
        let y: Vec<BigInt> = (0..g)
            .map(|c| {
                x.iter()
                    .zip(&self.transform)
                    .filter(|(xi, _)| !xi.is_zero())
                    .map(|(xi, row)| xi * &row[c])
                    .sum()
            })
            .collect();
        let r = self.diagonal.len();
        let torsion = self
            .diagonal
            .iter()
            .zip(&y)
            .filter(|(d, _)| **d > BigInt::from(1))
            .map(|(d, v)| v.mod_floor(d))
            .collect();
        ClassVector {
            free: y[r..].to_vec(),
            torsion,
        }
    }

    /// Group operation in canonical coordinates.
    pub fn add(&self, a: &ClassVector, b: &ClassVector) -> ClassVector {
        ClassVector {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&b.torsion)
                .zip(&self.torsion)
                .map(|((x, y), d)| (x + y).mod_floor(d))
                .collect(),
        }
    }

    /// Exponent vector of a generator word over this group's generators.
    /// `Dl(0)` counts as `δ_0`.
    pub fn exponent_vector(&self, w: &GeneratorWord) -> Result<Vec<BigInt>> {
        let index: HashMap<Atom, usize> = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, &a)| (a, i))
            .collect();
        let mut x = vec![BigInt::zero(); self.generators.len()];
        for &(a, e) in w.factors() {
            let a = if a == Atom::Dl(0) { Atom::D0 } else { a };
            let &i = index.get(&a).ok_or(BraidError::ForeignAtom(a))?;
            x[i] += e;
        }
        Ok(x)
    }
}

pub fn h1(p: &Presentation) -> Result<AbelianStructure> {
    let probe = AbelianStructure {
        group: p.group,
        strands: p.strands,
        generators: p.generators.clone(),
        rank: 0,
        torsion: Vec::new(),
        diagonal: Vec::new(),
        transform: Vec::new(),
    };
    let matrix: Vec<Vec<BigInt>> = p
        .relators
        .iter()
        .map(|r| probe.exponent_vector(&r.word))
        .collect::<Result<_>>()?;
    let g = p.generators.len();
    let s = smith_normal_form(&matrix, g);
    debug_assert!(s.diagonal.iter().all(|d| d.is_positive()));
    let torsion = s
        .diagonal
        .iter()
        .filter(|d| **d > BigInt::from(1))
        .cloned()
        .collect();
    Ok(AbelianStructure {
        rank: g - s.diagonal.len(),
        torsion,
        diagonal: s.diagonal,
        transform: s.col_transform,
        ..probe
    })
}

pub fn min_generators(a: &AbelianStructure) -> usize {
    a.rank + a.torsion.len()
}

/// Maps quasitoric braids to `H_1(QB_n)`, caching the abelianization.
#[derive(Debug, Clone)]
pub struct QbClassifier {
    structure: AbelianStructure,
}

impl QbClassifier {
    pub fn new(n: usize) -> Result<Self> {
        Ok(QbClassifier {
            structure: h1(&qb_relators(n)?)?,
        })
    }

    pub fn structure(&self) -> &AbelianStructure {
        &self.structure
    }

    /// Exponent vector over `(δ_0, t_{1,2}, …, t_{n-1,n})` of a braid in `QB_n`:
    /// `β = δ_0^k · p`, and the pure part is read off its linking numbers.
    pub fn exponents(&self, w: &BraidWord) -> Result<Vec<BigInt>> {
        if w.strands() != self.structure.strands {
            return Err(BraidError::StrandMismatch {
                left: w.strands(),
                right: self.structure.strands,
            });
        }
        let (k, p) = factor(w)?;
        let t = linking(&p)?.t_exponents();
        let mut x = Vec::with_capacity(t.len() + 1);
        x.push(BigInt::from(k));
        x.extend(t.into_iter().map(BigInt::from));
        Ok(x)
    }

    pub fn class(&self, w: &BraidWord) -> Result<ClassVector> {
        Ok(self.structure.classify(&self.exponents(w)?))
    }

    pub fn class_of_word(&self, w: &GeneratorWord) -> Result<ClassVector> {
        Ok(self.structure.classify(&self.structure.exponent_vector(w)?))
    }
}

/// Homology class of a quasitoric braid in `H_1(QB_n)`.
pub fn qt_class(w: &BraidWord) -> Result<ClassVector> {
    QbClassifier::new(w.strands())?.class(w)
}
