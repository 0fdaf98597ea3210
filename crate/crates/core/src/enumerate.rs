//! Exhaustive generators for the poset families on small ground sets.
//!
//! Posets are grown one column of the incidence matrix at a time: element `j`
//! is added as a new maximal element whose strict downset is a down-closed
//! subset of `[j]`. Down-closure is exactly transitivity, and since existing
//! downsets never change afterwards, the 3-free and (2+2)-free conditions can
//! be enforced at the moment each column is chosen.

use thiserror::Error;

use crate::poset::{bits, FamilyId, Poset};

/// Default resource guard for brute-force enumeration.
pub const BRUTE_FORCE_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("n = {n} exceeds the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

struct Builder {
    family: FamilyId,
    n: usize,
    succ: Vec<u64>,
    down: Vec<u64>,
}

impl Builder {
    fn new(family: FamilyId, n: usize) -> Self {
        Builder {
            family,
            n,
            succ: Vec::with_capacity(n),
            down: Vec::with_capacity(n),
        }
    }

    fn column_allowed(&self, d: u64) -> bool {
        // Down-closed in the poset built so far.
        if bits(d).any(|x| self.down[x] & !d != 0) {
            return false;
        }
        match self.family {
            FamilyId::Nl => true,
            // Everything below the new element must be minimal.
            FamilyId::Nl3Free | FamilyId::Nl3FreeNoIso | FamilyId::StanleyGraph => {
                bits(d).all(|x| self.down[x] == 0)
            }
            FamilyId::Nl22Free => self.down.iter().all(|&e| e & d == e || e & d == d),
            FamilyId::Nl3And22Free => {
                bits(d).all(|x| self.down[x] == 0)
                    && self.down.iter().all(|&e| e & d == e || e & d == d)
            }
        }
    }

    fn run(&mut self, emit: &mut dyn FnMut(&Poset)) {
        let j = self.succ.len();
        if j == self.n {
            let p = Poset::from_rows_unchecked(self.succ.clone());
            if matches!(
                self.family,
                FamilyId::Nl3Free | FamilyId::Nl3FreeNoIso | FamilyId::StanleyGraph
            ) {
                debug_assert!(
                    p.minima() | p.maxima() == (1u64 << self.n).wrapping_sub(1) || self.n == 64
                );
            }
            if self.family == FamilyId::Nl3FreeNoIso && p.has_isolated() {
                return;
            }
            emit(&p);
            return;
        }
        for d in 0..(1u64 << j) {
            if !self.column_allowed(d) {
                continue;
            }
            for x in bits(d) {
                self.succ[x] |= 1 << j;
            }
            self.succ.push(0);
            self.down.push(d);
            self.run(emit);
            self.down.pop();
            self.succ.pop();
            for x in bits(d) {
                self.succ[x] &= !(1 << j);
            }
        }
    }
}

fn guard(n: usize, limit: usize) -> Result<(), EnumerateError> {
    if n > limit {
        return Err(EnumerateError::TooLarge { n, limit });
    }
    Ok(())
}

/// Calls `emit` once per member of the family on `[n]`, in generation order.
pub fn for_each_in_family(
    family: FamilyId,
    n: usize,
    limit: usize,
    mut emit: impl FnMut(&Poset),
) -> Result<(), EnumerateError> {
    guard(n, limit)?;
    Builder::new(family, n).run(&mut emit);
    Ok(())
}

/// Sort key realising lexicographic order on the row-major matrix bits.
fn row_major_key(p: &Poset) -> Vec<u64> {
    p.successor_rows()
        .iter()
        .map(|r| r.reverse_bits())
        .collect()
}

/// Every member of the family on `[n]`, each exactly once, in canonical order
/// (lexicographic on the row-major incidence matrix bits).
pub fn enumerate_family(
    family: FamilyId,
    n: usize,
) -> Result<std::vec::IntoIter<Poset>, EnumerateError> {
    enumerate_family_with_limit(family, n, BRUTE_FORCE_LIMIT)
}

pub fn enumerate_family_with_limit(
    family: FamilyId,
    n: usize,
    limit: usize,
) -> Result<std::vec::IntoIter<Poset>, EnumerateError> {
    let mut all = Vec::new();
    for_each_in_family(family, n, limit, |p| all.push(p.clone()))?;
    all.sort_by_cached_key(row_major_key);
    Ok(all.into_iter())
}

pub fn count_family(family: FamilyId, n: usize) -> Result<u64, EnumerateError> {
    count_family_with_limit(family, n, BRUTE_FORCE_LIMIT)
}

pub fn count_family_with_limit(
    family: FamilyId,
    n: usize,
    limit: usize,
) -> Result<u64, EnumerateError> {
    let mut count = 0u64;
    for_each_in_family(family, n, limit, |_| count += 1)?;
    Ok(count)
}

/// Counts indexed by the number of minimal elements, `0..=n`.
pub fn count_family_by_minima(
    family: FamilyId,
    n: usize,
    limit: usize,
) -> Result<Vec<u64>, EnumerateError> {
    let mut counts = vec![0u64; n + 1];
    for_each_in_family(family, n, limit, |p| {
        counts[p.minima().count_ones() as usize] += 1
    })?;
    Ok(counts)
}
