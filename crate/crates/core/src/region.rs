use std::fmt;

use crate::{Error, Result};

/// Axis-aligned, inclusive, non-empty box of 1-based indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndexBox {
    lo: Vec<usize>,
    hi: Vec<usize>,
}

impl IndexBox {
    /// Builds a box from its two corners. Fails if the corners differ in
    /// length, are zero-dimensional, or `lo > hi` on some axis.
    pub fn new(lo: Vec<usize>, hi: Vec<usize>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch {
                expected: lo.len(),
                got: hi.len(),
            });
        }
        if lo.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if let Some(axis) = (0..lo.len()).find(|&i| lo[i] > hi[i]) {
            return Err(Error::EmptyBox {
                axis,
                lo: lo[axis],
                hi: hi[axis],
            });
        }
        Ok(Self { lo, hi })
    }

    /// The single-cell box `[p : p]`.
    pub fn point(p: &[usize]) -> Result<Self> {
        Self::new(p.to_vec(), p.to_vec())
    }

    /// `[1, .., 1 : side, .., side]`.
    pub fn full(dim: usize, side: usize) -> Result<Self> {
        Self::new(vec![1; dim], vec![side; dim])
    }

    pub fn lo(&self) -> &[usize] {
        &self.lo
    }

    pub fn hi(&self) -> &[usize] {
        &self.hi
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    /// Number of cells, saturating at `u64::MAX`.
    pub fn volume(&self) -> u64 {
        self.lo
            .iter()
            .zip(&self.hi)
            .fold(1u64, |acc, (&l, &h)| acc.saturating_mul((h - l + 1) as u64))
    }

    pub fn contains(&self, p: &[usize]) -> bool {
        p.len() == self.dim()
            && p.iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(&x, (&l, &h))| l <= x && x <= h)
    }

    /// Checks the box lies inside `[1..=side]^dim`.
    pub fn check_within(&self, dim: usize, side: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: self.dim(),
            });
        }
        check_coord(&self.lo, dim, side)?;
        check_coord(&self.hi, dim, side)
    }
}

impl fmt::Debug for IndexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IndexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(f, "[{} : {}]", join(&self.lo), join(&self.hi))
    }
}

/// Checks `p` has `dim` components, each in `1..=side`.
pub(crate) fn check_coord(p: &[usize], dim: usize, side: usize) -> Result<()> {
    if p.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: p.len(),
        });
    }
    match p.iter().position(|&x| x == 0 || x > side) {
        Some(axis) => Err(Error::OutOfRange {
            axis,
            value: p[axis],
            side,
        }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_inverted_axis() {
        assert_eq!(
            IndexBox::new(vec![1, 5], vec![2, 3]),
            Err(Error::EmptyBox {
                axis: 1,
                lo: 5,
                hi: 3
            })
        );
    }

    #[test]
    fn volume_and_bounds() {
        let b = IndexBox::new(vec![2, 1, 3], vec![4, 1, 3]).unwrap();
        assert_eq!(b.volume(), 3);
        assert!(b.contains(&[3, 1, 3]));
        assert!(!b.contains(&[3, 2, 3]));
        assert!(b.check_within(3, 4).is_ok());
        assert!(matches!(
            b.check_within(3, 3),
            Err(Error::OutOfRange {
                axis: 0,
                value: 4,
                side: 3
            })
        ));
        assert!(matches!(
            b.check_within(2, 4),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn zero_coordinate_is_out_of_range() {
        assert!(check_coord(&[0, 1], 2, 4).is_err());
    }
}
