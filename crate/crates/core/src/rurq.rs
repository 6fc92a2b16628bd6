//! Range-update range-query tree.
//!
//! After any sequence of box updates, the prefix sum `rsum(1..1 : x)` is a
//! multilinear polynomial in `x_1..x_d` whose coefficients are piecewise
//! constant over the grid. [`RurqTree`] keeps one [`FenwickNd`] per monomial
//! (indexed by the bitmask of axes it multiplies) holding those coefficients
//! under the range-update / point-query reading, and evaluates the polynomial
//! at query time.
//!
//! A box update is split into 2^d signed suffix updates at the corners `q` of
//! the box (`q_i` is `lo_i` or `hi_i + 1`). A suffix update of weight `w` at
//! `q` changes `rsum(1..1 : x)` by `w * prod_i (x_i - q_i + 1)` for `x >= q`,
//! so the coefficient of the monomial on axis set `S` receives
//! `w * prod_{i not in S} (1 - q_i)` as a point update at `q`.

use crate::error::checked_cells;
use crate::fenwick::FenwickNd;
use crate::region::check_coord;
use crate::structure::RangeStructure;
use crate::{IndexBox, Probe, Result, WorkStats, DEFAULT_CELL_CAP, MAX_DIM};

/// Bitmask over the axes: bit `i` set means the monomial contains `x_i`.
pub type SubsetMask = usize;

#[derive(Debug, Clone)]
pub struct RurqTree {
    dim: usize,
    side: usize,
    trees: Vec<FenwickNd>,
    counting: bool,
    stats: WorkStats,
}

impl RurqTree {
    pub fn new(dim: usize, side: usize) -> Result<Self> {
        Self::with_cap(dim, side, DEFAULT_CELL_CAP)
    }

    /// `cap` bounds the total cell count across all 2^d trees.
    pub fn with_cap(dim: usize, side: usize, cap: u64) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(crate::Error::DimensionTooLarge(dim));
        }
        checked_cells(dim, side, 1u64 << dim.max(1), cap)?;
        let trees = (0..1usize << dim)
            .map(|_| FenwickNd::with_cap(dim, side, u64::MAX))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            dim,
            side,
            trees,
            counting: false,
            stats: WorkStats::default(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> usize {
        self.side
    }

    /// Always `2^dim`.
    pub fn tree_count(&self) -> usize {
        self.trees.len()
    }

    /// Coefficient tree for the monomial on axis set `mask`.
    pub fn tree(&self, mask: SubsetMask) -> &FenwickNd {
        &self.trees[mask]
    }

    pub fn cells_allocated(&self) -> usize {
        self.trees.iter().map(FenwickNd::cells_allocated).sum()
    }

    /// Counters accumulated through the [`RangeStructure`] interface while
    /// counting is enabled.
    pub fn stats(&self) -> WorkStats {
        self.stats
    }

    /// Adds `c` to every cell of `b`.
    pub fn update(&mut self, b: &IndexBox, c: i64) -> Result<()> {
        self.update_probed(b, c, &mut ())
    }

    pub fn update_probed(&mut self, b: &IndexBox, c: i64, probe: &mut impl Probe) -> Result<()> {
        b.check_within(self.dim, self.side)?;
        if c == 0 {
            return Ok(());
        }
        let d = self.dim;
        let mut corner = [0usize; MAX_DIM];
        let mut factor = [0i64; MAX_DIM];
        'corners: for pick in 0usize..1 << d {
            for axis in 0..d {
                let q = if pick >> axis & 1 == 1 {
                    b.hi()[axis] + 1
                } else {
                    b.lo()[axis]
                };
                if q > self.side {
                    continue 'corners;
                }
                corner[axis] = q;
                factor[axis] = 1i64.wrapping_sub(q as i64);
            }
            let w = if pick.count_ones() % 2 == 0 {
                c
            } else {
                c.wrapping_neg()
            };
            for (mask, tree) in self.trees.iter_mut().enumerate() {
                let coeff = (0..d)
                    .filter(|axis| mask >> axis & 1 == 0)
                    .fold(w, |acc, axis| acc.wrapping_mul(factor[axis]));
                if coeff != 0 {
                    let touched = tree.add_unchecked(&corner[..d], coeff);
                    probe.point_update(touched);
                }
            }
        }
        Ok(())
    }

    /// `rsum(1..1 : p)`.
    pub fn prefix(&self, p: &[usize]) -> Result<i64> {
        self.prefix_probed(p, &mut ())
    }

    pub fn prefix_probed(&self, p: &[usize], probe: &mut impl Probe) -> Result<i64> {
        check_coord(p, self.dim, self.side)?;
        Ok(self.eval_unchecked(p, probe))
    }

    /// Sum over `b` by inclusion-exclusion on its 2^d corners. Corners with a
    /// zero coordinate contribute nothing and are not traversed.
    pub fn range_sum(&self, b: &IndexBox) -> Result<i64> {
        self.range_sum_probed(b, &mut ())
    }

    pub fn range_sum_probed(&self, b: &IndexBox, probe: &mut impl Probe) -> Result<i64> {
        b.check_within(self.dim, self.side)?;
        let d = self.dim;
        let mut corner = [0usize; MAX_DIM];
        let mut total = 0i64;
        'corners: for pick in 0usize..1 << d {
            for (axis, slot) in corner[..d].iter_mut().enumerate() {
                let q = if pick >> axis & 1 == 1 {
                    b.lo()[axis] - 1
                } else {
                    b.hi()[axis]
                };
                if q == 0 {
                    continue 'corners;
                }
                *slot = q;
            }
            let v = self.eval_unchecked(&corner[..d], probe);
            total = if pick.count_ones() % 2 == 0 {
                total.wrapping_add(v)
            } else {
                total.wrapping_sub(v)
            };
        }
        Ok(total)
    }

    pub fn clear(&mut self) {
        self.trees.iter_mut().for_each(FenwickNd::clear);
        self.stats.reset();
    }

    fn eval_unchecked(&self, p: &[usize], probe: &mut impl Probe) -> i64 {
        let mut total = 0i64;
        for (mask, tree) in self.trees.iter().enumerate() {
            let (coeff, touched) = tree.prefix_unchecked(p);
            probe.prefix_query(touched);
            let term = (0..self.dim)
                .filter(|axis| mask >> axis & 1 == 1)
                .fold(coeff, |acc, axis| acc.wrapping_mul(p[axis] as i64));
            total = total.wrapping_add(term);
        }
        total
    }
}

impl RangeStructure for RurqTree {
    fn name(&self) -> &'static str {
        "rurq"
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn side(&self) -> usize {
        self.side
    }

    fn update(&mut self, b: &IndexBox, c: i64) -> Result<()> {
        if self.counting {
            let mut stats = self.stats;
            let r = self.update_probed(b, c, &mut stats);
            self.stats = stats;
            r
        } else {
            RurqTree::update(self, b, c)
        }
    }

    fn query(&mut self, b: &IndexBox) -> Result<i64> {
        if self.counting {
            let mut stats = self.stats;
            let r = self.range_sum_probed(b, &mut stats);
            self.stats = stats;
            r
        } else {
            self.range_sum(b)
        }
    }

    fn set_counting(&mut self, on: bool) {
        self.counting = on;
    }

    fn visits(&self) -> u64 {
        self.stats.cells_touched
    }

    fn reset_visits(&mut self) {
        self.stats.reset();
    }

    fn cells_allocated(&self) -> u64 {
        RurqTree::cells_allocated(self) as u64
    }
}
