//! Naturally labelled posets and their 3-free and (2+2)-free restrictions.
//!
//! The crate is split along the lines of the objects it handles:
//!
//! * [`poset`], [`matrix_pattern`] and [`enumerate`]: posets on `[n]`, their
//!   incidence matrices, partial-submatrix characterisations and exhaustive
//!   generators for small `n`.
//! * [`perm`] and [`bijections`]: permutations, vincular patterns and the
//!   chain of bijections from {3, 2+2}-free naturally labelled posets to
//!   permutations avoiding 43-12.
//! * [`counting`]: exact arbitrary-precision counting (q-Stirling table,
//!   truncated generating functions, the generating-tree recurrence for
//!   Av(12-34)).
//! * [`analysis`]: ratio transforms and log-space fits of the
//!   stretched-exponential model `A * gamma^n * mu^(n^(1/3)) * n^beta`.
//! * [`bfile`]: OEIS b-file parsing and comparison.
//! * [`verify`]: the aggregated invariant suites run by `nlposets verify`.

pub mod analysis;
pub mod bfile;
pub mod bijections;
pub mod counting;
pub mod enumerate;
pub mod matrix_pattern;
pub mod perm;
pub mod poset;
pub mod verify;

pub use enumerate::{count_family, enumerate_family, BRUTE_FORCE_LIMIT};
pub use poset::{FamilyId, IncidenceMatrix, Poset, PosetError};
