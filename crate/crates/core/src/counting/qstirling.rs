//! `p(n, k)`: 3-free NL posets on `[n]` with `k` minimal elements.
//!
//! `p(n, k) = p(n-1, k-1) + (2^k - 1) p(n-1, k)` with `p(0, 0) = 1`, which is
//! the Carlitz recurrence for the q-Stirling numbers of the second kind at
//! `q = 2`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::CountSeries;

/// Lower-triangular table `p(n, k)`, `0 ≤ k ≤ n ≤ N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimaTable {
    rows: Vec<Vec<BigUint>>,
}

impl MinimaTable {
    pub fn from_rows(rows: Vec<Vec<BigUint>>) -> Self {
        MinimaTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `p(n, k)`; zero outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> BigUint {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    pub fn row_sums(&self) -> CountSeries {
        CountSeries::new(
            "nl-3free",
            0,
            self.rows.iter().map(|r| r.iter().sum()).collect(),
        )
    }
}

impl fmt::Display for MinimaTable {
    /// One row per `n`, entries `k = 0..=n` separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn q_stirling_table(max_n: usize) -> MinimaTable {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let mut row = vec![BigUint::zero(); n + 1];
        for k in 1..=n {
            let mut v = prev[k - 1].clone();
            if k < n {
                let weight = (BigUint::one() << k) - 1u32;
                v += weight * &prev[k];
            }
            row[k] = v;
        }
        rows.push(row);
    }
    MinimaTable { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_values() {
        let t = q_stirling_table(12);
        for n in 0..=12 {
            assert_eq!(t.get(n, n), BigUint::one());
            if n > 0 {
                assert!(t.get(n, 0).is_zero());
            }
            assert!(t.get(n, n + 1).is_zero());
        }
        assert_eq!(t.get(3, 2), BigUint::from(4u32));
    }

    #[test]
    fn row_sums_match_hierarchy() {
        let sums = q_stirling_table(5).row_sums();
        let expect: Vec<BigUint> = [1u32, 1, 2, 6, 26, 158].iter().map(|&x| x.into()).collect();
        assert_eq!(sums.terms, expect);
    }

    #[test]
    fn triangle_text() {
        assert_eq!(q_stirling_table(3).to_string(), "1\n0 1\n0 1 1\n0 1 4 1\n");
    }
}
