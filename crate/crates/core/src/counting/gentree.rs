//! Generating tree for permutations avoiding 12-34.
//!
//! A permutation of length `n` is labelled `(k, ℓ)`: `k` is its lowest ascent
//! top (`n + 1` when it has no ascent) and `ℓ` its last entry. Appending a new
//! last entry `j ∈ [1, n+1]` gives
//!
//! ```text
//! ℓ ≤ k:  (k+1, j) for j ≤ ℓ,   (j, j) for ℓ < j ≤ k,   (k, j) for k < j ≤ n+1
//! ℓ > k:  (k+1, j) for j ≤ k,   (k, j) for k < j ≤ ℓ
//! ```
//!
//! With `S_k(j) = Σ_{ℓ ≥ j} T[k][ℓ]` the row suffix sums of the current table,
//! the next table is
//!
//! ```text
//! T'[k+1][j] = S_k(j)                              (j ≤ k)
//! T'[j][j]   = Σ_{k ≥ j} (S_k(1) - S_k(j))
//! T'[k][j]   = S_k(1) - S_k(k+1) + S_k(j)          (k < j ≤ n+1, S_k(n+1) = 0)
//! ```
//!
//! so a length step costs `O(n²)` big-integer additions.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{CountSeries, CountingError};

/// Default memory budget for [`generating_tree_counts_with`].
pub const DEFAULT_MEMORY_BUDGET: u64 = 4 << 30;

/// State counts for one length `n`, indexed `(k, ℓ)` with `k ∈ [1, n+1]`,
/// `ℓ ∈ [1, n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeStateTable {
    n: usize,
    /// `rows[k][ℓ]`, with unused index 0 in both coordinates.
    rows: Vec<Vec<BigUint>>,
}

impl TreeStateTable {
    fn initial() -> Self {
        // The single permutation 1 has no ascent: (k, ℓ) = (2, 1).
        let mut rows = vec![vec![BigUint::zero(); 2]; 3];
        rows[2][1] = BigUint::one();
        TreeStateTable { n: 1, rows }
    }

    /// Table of zeros for permutations of length `n`.
    pub fn zeros(n: usize) -> Self {
        TreeStateTable {
            n,
            rows: vec![vec![BigUint::zero(); n + 1]; n + 2],
        }
    }

    pub fn length(&self) -> usize {
        self.n
    }

    /// Count of permutations with lowest ascent top `k` and last entry `ℓ`.
    pub fn get(&self, k: usize, l: usize) -> &BigUint {
        &self.rows[k][l]
    }

    pub fn get_mut(&mut self, k: usize, l: usize) -> &mut BigUint {
        &mut self.rows[k][l]
    }

    pub fn total(&self) -> BigUint {
        self.rows.iter().flatten().sum()
    }

    /// Totals over `ℓ ≤ k` and over `ℓ > k`.
    pub fn split_totals(&self) -> (BigUint, BigUint) {
        let mut low = BigUint::zero();
        let mut high = BigUint::zero();
        for (k, row) in self.rows.iter().enumerate() {
            for (l, c) in row.iter().enumerate() {
                if l <= k {
                    low += c;
                } else {
                    high += c;
                }
            }
        }
        (low, high)
    }

    /// Resizes `self` to a zeroed table for length `n`, keeping allocations.
    fn reset(&mut self, n: usize) {
        self.n = n;
        self.rows.resize_with(n + 2, Vec::new);
        for row in &mut self.rows {
            row.resize_with(n + 1, BigUint::zero);
            for c in row.iter_mut() {
                c.set_zero();
            }
        }
    }

    /// Replaces each row by its suffix sums in place and writes the table for
    /// length `n + 1` into `next`.
    fn step_into(&mut self, next: &mut TreeStateTable) {
        let n = self.n;
        for row in self.rows.iter_mut() {
            for l in (1..n).rev() {
                let (head, tail) = row.split_at_mut(l + 1);
                head[l] += &tail[0];
            }
        }
        next.reset(n + 1);
        let s = &self.rows;
        for k in 1..=n + 1 {
            if s[k][1].is_zero() {
                continue;
            }
            for j in 1..=k.min(n) {
                next.rows[k + 1][j].clone_from(&s[k][j]);
            }
            if k <= n {
                let mut low = s[k][1].clone();
                if k < n {
                    low -= &s[k][k + 1];
                }
                for j in k + 1..=n + 1 {
                    let target = &mut next.rows[k][j];
                    target.clone_from(&low);
                    if j <= n {
                        *target += &s[k][j];
                    }
                }
            }
        }
        for j in 2..=n + 1 {
            let target = &mut next.rows[j][j];
            for row in &s[j..=n + 1] {
                *target += &row[1];
                if j <= n {
                    *target -= &row[j];
                }
            }
        }
    }
}

/// Upper bound on the bytes two tables need at length `max_n`.
pub fn memory_estimate(max_n: usize) -> u64 {
    // log2(max_n!) bits per entry, plus the BigUint header.
    let bits: f64 = (2..=max_n).map(|i| (i as f64).log2()).sum();
    let per_entry = (bits / 8.0).ceil() as u64 + 8 + std::mem::size_of::<BigUint>() as u64;
    let entries = ((max_n + 2) * (max_n + 1)) as u64;
    2 * entries * per_entry
}

/// `|Av_n(12-34)|` for `n = 0..=max_n`.
pub fn generating_tree_counts(max_n: usize) -> Result<CountSeries, CountingError> {
    generating_tree_counts_with(max_n, DEFAULT_MEMORY_BUDGET, |_| {})
}

/// As [`generating_tree_counts`], calling `snapshot` with the state table of
/// every length `1..=max_n`.
pub fn generating_tree_counts_with(
    max_n: usize,
    memory_budget: u64,
    mut snapshot: impl FnMut(&TreeStateTable),
) -> Result<CountSeries, CountingError> {
    let needed = memory_estimate(max_n);
    if needed > memory_budget {
        return Err(CountingError::MemoryBudget {
            terms: max_n + 1,
            needed,
            budget: memory_budget,
        });
    }
    let mut terms = vec![BigUint::one()];
    if max_n >= 1 {
        let mut current = TreeStateTable::initial();
        let mut next = TreeStateTable::zeros(0);
        snapshot(&current);
        terms.push(current.total());
        for _ in 2..=max_n {
            current.step_into(&mut next);
            std::mem::swap(&mut current, &mut next);
            snapshot(&current);
            terms.push(current.total());
        }
    }
    Ok(CountSeries::new("av12-34", 0, terms))
}
