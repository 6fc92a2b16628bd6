//! Region-form reference implementations for one and two dimensions.
//!
//! These keep separate coefficient trees (`bitc`/`biti` in 1D,
//! `bitxy`/`bitx`/`bity`/`biti` in 2D) and add the per-region polynomial
//! pieces with range updates exactly as the original region analysis lays
//! them out. They exist as a cross-check for the corner engine in
//! [`crate::RurqTree`] and are not meant for production use.
//!
//! In 2D the in-box constant term is `c(x1 - 1)(y1 - 1)`: expanding
//! `c(x - x1 + 1)(y - y1 + 1)` forces it.

use crate::{FenwickNd, IndexBox, Result};

/// `updater(bit, lo, hi, c)`. Regions that start past `n` are empty.
fn updater(bit: &mut FenwickNd, lo: &[usize], hi: &[usize], c: i64) -> Result<()> {
    if lo.iter().any(|&l| l > bit.side()) {
        return Ok(());
    }
    bit.range_update(&IndexBox::new(lo.to_vec(), hi.to_vec())?, c)
}

#[derive(Debug, Clone)]
pub struct Literal1d {
    n: usize,
    bitc: FenwickNd,
    biti: FenwickNd,
}

impl Literal1d {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self {
            n,
            bitc: FenwickNd::new(1, n)?,
            biti: FenwickNd::new(1, n)?,
        })
    }

    pub fn update(&mut self, x1: usize, x2: usize, c: i64) -> Result<()> {
        let n = self.n;
        let below = (x1 as i64 - 1).wrapping_mul(c);
        let width = (x2 - x1 + 1) as i64;
        updater(&mut self.bitc, &[x1], &[x2], c)?;
        updater(&mut self.biti, &[x1], &[x2], below.wrapping_neg())?;
        updater(&mut self.biti, &[x2 + 1], &[n], c.wrapping_mul(width))
    }

    /// `rsum(1 : x)`.
    pub fn query(&self, x: usize) -> Result<i64> {
        let a = self.bitc.point_query(&[x])?;
        let b = self.biti.point_query(&[x])?;
        Ok(a.wrapping_mul(x as i64).wrapping_add(b))
    }
}

#[derive(Debug, Clone)]
pub struct Literal2d {
    n: usize,
    bitxy: FenwickNd,
    bitx: FenwickNd,
    bity: FenwickNd,
    biti: FenwickNd,
}

impl Literal2d {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self {
            n,
            bitxy: FenwickNd::new(2, n)?,
            bitx: FenwickNd::new(2, n)?,
            bity: FenwickNd::new(2, n)?,
            biti: FenwickNd::new(2, n)?,
        })
    }

    pub fn update(
        &mut self,
        (x1, y1): (usize, usize),
        (x2, y2): (usize, usize),
        c: i64,
    ) -> Result<()> {
        let n = self.n;
        let xm = x1 as i64 - 1;
        let ym = y1 as i64 - 1;
        let w = (x2 - x1 + 1) as i64;
        let h = (y2 - y1 + 1) as i64;
        updater(&mut self.bitxy, &[x1, y1], &[x2, y2], c)?;

        updater(
            &mut self.bitx,
            &[x1, y1],
            &[x2, y2],
            c.wrapping_mul(ym).wrapping_neg(),
        )?;
        updater(&mut self.bitx, &[x1, y2 + 1], &[x2, n], c.wrapping_mul(h))?;

        updater(
            &mut self.bity,
            &[x1, y1],
            &[x2, y2],
            c.wrapping_mul(xm).wrapping_neg(),
        )?;
        updater(&mut self.bity, &[x2 + 1, y1], &[n, y2], c.wrapping_mul(w))?;

        updater(
            &mut self.biti,
            &[x1, y1],
            &[x2, y2],
            c.wrapping_mul(xm).wrapping_mul(ym),
        )?;
        updater(
            &mut self.biti,
            &[x2 + 1, y1],
            &[n, y2],
            c.wrapping_mul(ym).wrapping_mul(w).wrapping_neg(),
        )?;
        updater(
            &mut self.biti,
            &[x1, y2 + 1],
            &[x2, n],
            c.wrapping_mul(xm).wrapping_mul(h).wrapping_neg(),
        )?;
        updater(
            &mut self.biti,
            &[x2 + 1, y2 + 1],
            &[n, n],
            c.wrapping_mul(w).wrapping_mul(h),
        )?;
        Ok(())
    }

    /// `rsum(1, 1 : x, y)`.
    pub fn query(&self, x: usize, y: usize) -> Result<i64> {
        let p = [x, y];
        let a = self.bitxy.point_query(&p)?;
        let b = self.bitx.point_query(&p)?;
        let c = self.bity.point_query(&p)?;
        let d = self.biti.point_query(&p)?;
        let (x, y) = (x as i64, y as i64);
        Ok(a.wrapping_mul(x)
            .wrapping_mul(y)
            .wrapping_add(b.wrapping_mul(x))
            .wrapping_add(c.wrapping_mul(y))
            .wrapping_add(d))
    }
}
