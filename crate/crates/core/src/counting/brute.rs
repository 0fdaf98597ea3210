//! Exhaustive pattern-avoidance counts, used as an oracle for small lengths.

use super::CountingError;
use crate::perm::{for_each_permutation, VincularPattern};

/// Largest length [`brute_force_avoider_count`] will enumerate.
pub const PERMUTATION_LIMIT: usize = 10;

/// Number of permutations of length `n` avoiding `pattern`.
pub fn brute_force_avoider_count(
    pattern: &VincularPattern,
    n: usize,
) -> Result<u64, CountingError> {
    brute_force_avoider_count_with_limit(pattern, n, PERMUTATION_LIMIT)
}

pub fn brute_force_avoider_count_with_limit(
    pattern: &VincularPattern,
    n: usize,
    limit: usize,
) -> Result<u64, CountingError> {
    if n > limit {
        return Err(CountingError::TooLarge { n, limit });
    }
    let mut count = 0;
    for_each_permutation(n, |p| {
        if !pattern.is_contained_in(p) {
            count += 1;
        }
    });
    Ok(count)
}
