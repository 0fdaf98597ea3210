//! The bijections around {3, 2+2}-free naturally labelled posets.
//!
//! * [`word`]: posets ↔ labelled binary words.
//! * [`bicoloured`]: labelled binary words ↔ bicoloured permutations in 𝓑.
//! * [`lambda`]: 𝓑 ↔ permutations avoiding 43-12 (`lambda`, `psi`).
//! * [`stanley`]: 3-free NL posets ↔ Stanley graphs.
//! * [`decorated`]: 3-free NL posets ↔ decorated posets without isolated elements.
//!
//! Every failure carries a small witness (positions, elements or the number
//! of the violated condition) so that shrinking property tests stay readable.

pub mod bicoloured;
pub mod decorated;
pub mod lambda;
pub mod stanley;
pub mod word;

use thiserror::Error;

use crate::poset::{FamilyId, PosetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("poset is not in family {family}: {witness}")]
    NotInFamily { family: FamilyId, witness: String },
    #[error("labels do not form a permutation of [{0}]")]
    LabelsNotPermutation(usize),
    #[error("word violates condition {condition} at position {position}")]
    WordCondition { condition: u8, position: usize },
    #[error("bicoloured permutation has a {kind} at positions {first} and {second}")]
    NotInClassB {
        kind: &'static str,
        first: usize,
        second: usize,
    },
    #[error("permutation contains {pattern} at positions {positions:?}")]
    ContainsPattern {
        pattern: &'static str,
        positions: Vec<usize>,
    },
    #[error("permutation does not contain {0}")]
    MissingPattern(&'static str),
    #[error("vertex {0} has both smaller and larger neighbours")]
    NotStanley(usize),
    #[error("decorated poset: {0}")]
    BadDecoration(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("parse error: {0}")]
    Parse(String),
}
