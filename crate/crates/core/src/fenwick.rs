//! Flat d-dimensional Binary Indexed Tree.
//!
//! Cells live in one row-major buffer of `n^d` values; axis `k` has stride
//! `n^(d-1-k)`. Coordinate `x` on an axis maps to offset `x - 1`. The update
//! walk climbs with `i += lowbit(i)` and the query walk descends with
//! `i -= lowbit(i)`, nested once per axis.
//!
//! The same tree serves two readings:
//!
//! * point-update / prefix-query: [`FenwickNd::point_update`] then
//!   [`FenwickNd::prefix_query`] returns the sum over the origin box;
//! * range-update / point-query: [`FenwickNd::range_update`] adds at the
//!   2^d signed corners of a box, so [`FenwickNd::point_query`] returns the
//!   value of a single cell.

use crate::error::checked_cells;
use crate::region::check_coord;
use crate::{IndexBox, Probe, Result, DEFAULT_CELL_CAP, MAX_DIM};

#[inline]
fn lowbit(i: usize) -> usize {
    i & i.wrapping_neg()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FenwickNd {
    dim: usize,
    side: usize,
    strides: Vec<usize>,
    cells: Vec<i64>,
}

impl FenwickNd {
    pub fn new(dim: usize, side: usize) -> Result<Self> {
        Self::with_cap(dim, side, DEFAULT_CELL_CAP)
    }

    /// Like [`FenwickNd::new`] with an explicit cell cap.
    pub fn with_cap(dim: usize, side: usize, cap: u64) -> Result<Self> {
        let len = checked_cells(dim, side, 1, cap)?;
        let mut strides = vec![1usize; dim];
        for k in (0..dim.saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * side;
        }
        Ok(Self {
            dim,
            side,
            strides,
            cells: vec![0; len],
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> usize {
        self.side
    }

    /// Raw row-major storage.
    pub fn cells(&self) -> &[i64] {
        &self.cells
    }

    pub fn cells_allocated(&self) -> usize {
        self.cells.len()
    }

    pub fn clear(&mut self) {
        self.cells.fill(0);
    }

    pub fn point_update(&mut self, p: &[usize], v: i64) -> Result<()> {
        self.point_update_probed(p, v, &mut ())
    }

    pub fn point_update_probed(
        &mut self,
        p: &[usize],
        v: i64,
        probe: &mut impl Probe,
    ) -> Result<()> {
        check_coord(p, self.dim, self.side)?;
        let touched = self.add_unchecked(p, v);
        probe.point_update(touched);
        Ok(())
    }

    /// Sum of all point updates at positions `<= p` componentwise.
    pub fn prefix_query(&self, p: &[usize]) -> Result<i64> {
        self.prefix_query_probed(p, &mut ())
    }

    pub fn prefix_query_probed(&self, p: &[usize], probe: &mut impl Probe) -> Result<i64> {
        check_coord(p, self.dim, self.side)?;
        let (sum, touched) = self.prefix_unchecked(p);
        probe.prefix_query(touched);
        Ok(sum)
    }

    /// Adds `v` to every cell of `b` under the point-query reading.
    ///
    /// Issues one signed point update per corner formed by picking `lo[i]` or
    /// `hi[i] + 1` on each axis; corners past `n` on any axis are skipped.
    pub fn range_update(&mut self, b: &IndexBox, v: i64) -> Result<()> {
        self.range_update_probed(b, v, &mut ())
    }

    pub fn range_update_probed(
        &mut self,
        b: &IndexBox,
        v: i64,
        probe: &mut impl Probe,
    ) -> Result<()> {
        b.check_within(self.dim, self.side)?;
        let mut corner = [0usize; MAX_DIM];
        'corners: for mask in 0u32..(1 << self.dim) {
            for (axis, slot) in corner[..self.dim].iter_mut().enumerate() {
                let q = if mask >> axis & 1 == 1 {
                    b.hi()[axis] + 1
                } else {
                    b.lo()[axis]
                };
                if q > self.side {
                    continue 'corners;
                }
                *slot = q;
            }
            let w = if mask.count_ones() % 2 == 0 {
                v
            } else {
                v.wrapping_neg()
            };
            let touched = self.add_unchecked(&corner[..self.dim], w);
            probe.point_update(touched);
        }
        Ok(())
    }

    /// Current value of cell `p` under the range-update reading. Same walk as
    /// [`FenwickNd::prefix_query`].
    pub fn point_query(&self, p: &[usize]) -> Result<i64> {
        self.prefix_query(p)
    }

    /// Adds `v` along the update walk from `p`, which must already be valid.
    /// Returns the number of cells touched.
    pub(crate) fn add_unchecked(&mut self, p: &[usize], v: i64) -> u64 {
        debug_assert_eq!(p.len(), self.dim);
        let n = self.side;
        let cells = &mut self.cells;
        let mut touched = 0u64;
        match self.dim {
            1 => {
                let mut i = p[0];
                while i <= n {
                    cells[i - 1] = cells[i - 1].wrapping_add(v);
                    touched += 1;
                    i += lowbit(i);
                }
            }
            2 => {
                let mut i = p[0];
                while i <= n {
                    let row = (i - 1) * n;
                    let mut j = p[1];
                    while j <= n {
                        let c = &mut cells[row + j - 1];
                        *c = c.wrapping_add(v);
                        touched += 1;
                        j += lowbit(j);
                    }
                    i += lowbit(i);
                }
            }
            3 => {
                let mut i = p[0];
                while i <= n {
                    let plane = (i - 1) * n;
                    let mut j = p[1];
                    while j <= n {
                        let row = (plane + j - 1) * n;
                        let mut k = p[2];
                        while k <= n {
                            let c = &mut cells[row + k - 1];
                            *c = c.wrapping_add(v);
                            touched += 1;
                            k += lowbit(k);
                        }
                        j += lowbit(j);
                    }
                    i += lowbit(i);
                }
            }
            _ => add_axis(cells, &self.strides, n, p, 0, 0, v, &mut touched),
        }
        touched
    }

    /// Prefix sum at a valid `p`, with the number of cells touched.
    pub(crate) fn prefix_unchecked(&self, p: &[usize]) -> (i64, u64) {
        debug_assert_eq!(p.len(), self.dim);
        let n = self.side;
        let cells = &self.cells;
        let mut sum = 0i64;
        let mut touched = 0u64;
        match self.dim {
            1 => {
                let mut i = p[0];
                while i > 0 {
                    sum = sum.wrapping_add(cells[i - 1]);
                    touched += 1;
                    i -= lowbit(i);
                }
            }
            2 => {
                let mut i = p[0];
                while i > 0 {
                    let row = (i - 1) * n;
                    let mut j = p[1];
                    while j > 0 {
                        sum = sum.wrapping_add(cells[row + j - 1]);
                        touched += 1;
                        j -= lowbit(j);
                    }
                    i -= lowbit(i);
                }
            }
            3 => {
                let mut i = p[0];
                while i > 0 {
                    let plane = (i - 1) * n;
                    let mut j = p[1];
                    while j > 0 {
                        let row = (plane + j - 1) * n;
                        let mut k = p[2];
                        while k > 0 {
                            sum = sum.wrapping_add(cells[row + k - 1]);
                            touched += 1;
                            k -= lowbit(k);
                        }
                        j -= lowbit(j);
                    }
                    i -= lowbit(i);
                }
            }
            _ => sum_axis(cells, &self.strides, p, 0, 0, &mut sum, &mut touched),
        }
        (sum, touched)
    }

    #[cfg(test)]
    fn add_generic(&mut self, p: &[usize], v: i64) -> u64 {
        let mut touched = 0;
        add_axis(
            &mut self.cells,
            &self.strides,
            self.side,
            p,
            0,
            0,
            v,
            &mut touched,
        );
        touched
    }

    #[cfg(test)]
    fn prefix_generic(&self, p: &[usize]) -> (i64, u64) {
        let (mut sum, mut touched) = (0, 0);
        sum_axis(&self.cells, &self.strides, p, 0, 0, &mut sum, &mut touched);
        (sum, touched)
    }
}

#[allow(clippy::too_many_arguments)]
fn add_axis(
    cells: &mut [i64],
    strides: &[usize],
    side: usize,
    p: &[usize],
    axis: usize,
    base: usize,
    v: i64,
    touched: &mut u64,
) {
    let last = axis + 1 == p.len();
    let mut i = p[axis];
    while i <= side {
        let off = base + (i - 1) * strides[axis];
        if last {
            cells[off] = cells[off].wrapping_add(v);
            *touched += 1;
        } else {
            add_axis(cells, strides, side, p, axis + 1, off, v, touched);
        }
        i += lowbit(i);
    }
}

fn sum_axis(
    cells: &[i64],
    strides: &[usize],
    p: &[usize],
    axis: usize,
    base: usize,
    sum: &mut i64,
    touched: &mut u64,
) {
    let last = axis + 1 == p.len();
    let mut i = p[axis];
    while i > 0 {
        let off = base + (i - 1) * strides[axis];
        if last {
            *sum = sum.wrapping_add(cells[off]);
            *touched += 1;
        } else {
            sum_axis(cells, strides, p, axis + 1, off, sum, touched);
        }
        i -= lowbit(i);
    }
}

/// `floor(log2 n) + 1`: the longest walk along one axis of side `n`.
pub fn walk_bound(side: usize) -> u64 {
    (usize::BITS - side.leading_zeros()) as u64
}
