//! Common interface over every range-update range-query structure.

use std::fmt;
use std::str::FromStr;

use crate::baselines::{DenseOracle, LazySegTree1D, RegionTree};
use crate::{Error, IndexBox, Result, RurqTree};

/// Add-to-box / sum-over-box structure on `[1..=side]^dim`.
pub trait RangeStructure {
    fn name(&self) -> &'static str;
    fn dim(&self) -> usize;
    fn side(&self) -> usize;
    fn update(&mut self, b: &IndexBox, c: i64) -> Result<()>;
    /// Takes `&mut self` because lazy trees push pending tags while reading.
    fn query(&mut self, b: &IndexBox) -> Result<i64>;
    /// Counting starts disabled for [`RurqTree`] and enabled for the baselines.
    fn set_counting(&mut self, on: bool);
    /// Cells or nodes touched since the last reset.
    fn visits(&self) -> u64;
    fn reset_visits(&mut self);
    /// Cells (BIT, dense) or nodes (trees) currently allocated.
    fn cells_allocated(&self) -> u64;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureKind {
    Rurq,
    SegTree1d,
    Quadtree,
    Octree,
    Oracle,
}

impl StructureKind {
    pub const ALL: [StructureKind; 5] = [
        StructureKind::Rurq,
        StructureKind::SegTree1d,
        StructureKind::Quadtree,
        StructureKind::Octree,
        StructureKind::Oracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StructureKind::Rurq => "rurq",
            StructureKind::SegTree1d => "segtree1d",
            StructureKind::Quadtree => "quadtree",
            StructureKind::Octree => "octree",
            StructureKind::Oracle => "oracle",
        }
    }

    pub fn supports(self, dim: usize) -> bool {
        match self {
            StructureKind::Rurq | StructureKind::Oracle => dim >= 1,
            StructureKind::SegTree1d => dim == 1,
            StructureKind::Quadtree => dim == 2,
            StructureKind::Octree => dim == 3,
        }
    }

    /// Every kind that can run a `dim`-dimensional workload.
    pub fn applicable(dim: usize) -> Vec<StructureKind> {
        Self::ALL.into_iter().filter(|k| k.supports(dim)).collect()
    }

    pub fn build(self, dim: usize, side: usize) -> Result<Box<dyn RangeStructure + Send>> {
        if !self.supports(dim) {
            return Err(Error::UnsupportedDimension {
                structure: self.as_str(),
                dim,
            });
        }
        Ok(match self {
            StructureKind::Rurq => Box::new(RurqTree::new(dim, side)?),
            StructureKind::SegTree1d => Box::new(LazySegTree1D::new(side)?),
            StructureKind::Quadtree | StructureKind::Octree => {
                Box::new(RegionTree::new(dim, side)?)
            }
            StructureKind::Oracle => Box::new(DenseOracle::new(dim, side)?),
        })
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StructureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown structure `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for k in StructureKind::ALL {
            assert_eq!(k.as_str().parse::<StructureKind>().unwrap(), k);
        }
        assert!("segtree".parse::<StructureKind>().is_err());
    }

    #[test]
    fn dimension_support() {
        assert_eq!(
            StructureKind::applicable(2),
            vec![
                StructureKind::Rurq,
                StructureKind::Quadtree,
                StructureKind::Oracle
            ]
        );
        assert!(matches!(
            StructureKind::Octree.build(2, 4),
            Err(Error::UnsupportedDimension {
                structure: "octree",
                dim: 2
            })
        ));
        let s = StructureKind::Quadtree.build(2, 4).unwrap();
        assert_eq!(s.name(), "quadtree");
        let s = StructureKind::Octree.build(3, 4).unwrap();
        assert_eq!(s.name(), "octree");
    }
}
