//! Range-update range-query on d-dimensional arrays.
//!
//! The central structure is [`RurqTree`]: 2^d Fenwick trees, one per
//! multilinear monomial of the prefix-sum polynomial, which together answer
//! "add `c` to every cell of a box" and "sum every cell of a box" in
//! `O(4^d log^d n)` time for fixed `d`.
//!
//! Alongside it live the structures it is measured against
//! ([`baselines`]), a plain-text operation script format ([`opscript`]) and
//! a seeded benchmark harness ([`bench`]).
//!
//! All coordinates are 1-based and inclusive: a structure of side `n` has
//! valid indices `1..=n` on every axis. All arithmetic wraps modulo 2^64.

pub mod baselines;
pub mod bench;
mod error;
pub mod fenwick;
pub mod literal;
pub mod opscript;
pub mod probe;
mod region;
pub mod rng;
pub mod rurq;
pub mod structure;

pub use error::{Error, Result};
pub use fenwick::FenwickNd;
pub use probe::{Probe, VisitCounter, WorkStats};
pub use region::IndexBox;
pub use rurq::RurqTree;
pub use structure::{RangeStructure, StructureKind};

/// Largest supported dimension count.
pub const MAX_DIM: usize = 16;

/// Default upper bound on the number of 64-bit cells a single structure may
/// allocate (1 GiB).
pub const DEFAULT_CELL_CAP: u64 = 1 << 27;
