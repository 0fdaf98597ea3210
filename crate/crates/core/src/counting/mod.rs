//! Exact counting: the q-Stirling table, truncated generating functions and
//! their functional equations, the generating-tree recurrence for Av(12-34),
//! and brute-force pattern-avoidance oracles. Nothing here touches floating
//! point.

pub mod brute;
pub mod gentree;
pub mod gf;
pub mod qstirling;
pub mod series;

use num_bigint::BigUint;
use thiserror::Error;

pub use brute::brute_force_avoider_count;
pub use gentree::{generating_tree_counts, TreeStateTable};
pub use gf::{check_functional_equation, series_from_gf, FunctionalEquation, GfId};
pub use qstirling::{q_stirling_table, MinimaTable};
pub use series::BivariateSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("n = {n} exceeds the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("{terms} terms would need about {needed} bytes, over the budget of {budget}")]
    MemoryBudget {
        terms: usize,
        needed: u64,
        budget: u64,
    },
}

/// An exact integer sequence `terms[i] = a(offset + i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeries {
    pub family: String,
    pub offset: usize,
    pub terms: Vec<BigUint>,
}

impl CountSeries {
    pub fn new(family: impl Into<String>, offset: usize, terms: Vec<BigUint>) -> Self {
        CountSeries {
            family: family.into(),
            offset,
            terms,
        }
    }

    pub fn from_u64(family: impl Into<String>, offset: usize, terms: &[u64]) -> Self {
        Self::new(
            family,
            offset,
            terms.iter().map(|&t| BigUint::from(t)).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `a(n)`, if `n` is in range.
    pub fn get(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(self.offset).and_then(|i| self.terms.get(i))
    }

    /// Last index held, if any.
    pub fn last_index(&self) -> Option<usize> {
        (!self.terms.is_empty()).then(|| self.offset + self.terms.len() - 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.terms
            .iter()
            .enumerate()
            .map(move |(i, t)| (self.offset + i, t))
    }

    /// OEIS b-file text: a `#` comment naming the family, then `n a(n)` lines.
    pub fn to_bfile(&self) -> String {
        let mut s = format!("# {}\n", self.family);
        for (n, t) in self.iter() {
            s.push_str(&format!("{n} {t}\n"));
        }
        s
    }
}
