//! Structures the coefficient trees are compared against.
//!
//! * [`LazySegTree1D`]: implicit-array segment tree with lazy add tags.
//! * [`RegionTree`]: quadtree (2D) or octree (3D) over square/cubic cells,
//!   nodes allocated on first descent, lazy add tags.
//! * [`DenseOracle`]: a plain array updated and summed cell by cell. It is
//!   the ground truth for every equivalence test.
//!
//! Each carries a [`crate::VisitCounter`] that is bumped once per node
//! entered (or, for the oracle, per cell read or written). Lazy pushes write
//! only to children that the same call enters next, so they are covered by
//! those children's visits.

mod dense;
mod region_tree;
mod segtree;

pub use dense::DenseOracle;
pub use region_tree::RegionTree;
pub use segtree::LazySegTree1D;
