//! Exact computation in the braid group `B_n` and the quasitoric braid group
//! `QB_n`: the word problem, membership, factorization, presentations,
//! abelianization, and decomposition into small generating sets.

pub mod braid;
pub mod cli;
pub mod error;
pub mod garside;
pub mod genset;
pub mod presentations;
pub mod purebraid;
pub mod quasitoric;
pub mod snf;

pub use braid::{delta0, toric, Atom, BraidWord, GeneratorWord, Letter, Permutation};
pub use error::{BraidError, Result};
pub use garside::{equal, is_trivial, normal_form, GarsideNormalForm};
