use crate::error::checked_cells;
use crate::structure::RangeStructure;
use crate::{IndexBox, Result, VisitCounter, DEFAULT_CELL_CAP, MAX_DIM};

/// Flat `n^d` array with direct iteration.
#[derive(Debug, Clone)]
pub struct DenseOracle {
    dim: usize,
    side: usize,
    strides: Vec<usize>,
    cells: Vec<i64>,
    visits: VisitCounter,
}

impl DenseOracle {
    pub fn new(dim: usize, side: usize) -> Result<Self> {
        let len = checked_cells(dim, side, 1, DEFAULT_CELL_CAP)?;
        let mut strides = vec![1usize; dim];
        for k in (0..dim - 1).rev() {
            strides[k] = strides[k + 1] * side;
        }
        Ok(Self {
            dim,
            side,
            strides,
            cells: vec![0; len],
            visits: VisitCounter::default(),
        })
    }

    /// Value of one cell.
    pub fn get(&self, p: &[usize]) -> Result<i64> {
        crate::region::check_coord(p, self.dim, self.side)?;
        Ok(self.cells[self.offset(p)])
    }

    fn offset(&self, p: &[usize]) -> usize {
        p.iter()
            .zip(&self.strides)
            .map(|(&x, &s)| (x - 1) * s)
            .sum()
    }

    /// Calls `f` with the offset of every cell of `b`, row-major.
    fn for_each_offset(&self, b: &IndexBox, mut f: impl FnMut(usize)) {
        let d = self.dim;
        let mut p = [0usize; MAX_DIM];
        p[..d].copy_from_slice(b.lo());
        loop {
            f(self.offset(&p[..d]));
            let mut axis = d;
            loop {
                if axis == 0 {
                    return;
                }
                axis -= 1;
                if p[axis] < b.hi()[axis] {
                    p[axis] += 1;
                    break;
                }
                p[axis] = b.lo()[axis];
            }
        }
    }

    pub fn oracle_update(&mut self, b: &IndexBox, c: i64) -> Result<()> {
        b.check_within(self.dim, self.side)?;
        let mut offsets = Vec::with_capacity(b.volume() as usize);
        self.for_each_offset(b, |o| offsets.push(o));
        for o in offsets {
            self.cells[o] = self.cells[o].wrapping_add(c);
        }
        self.visits.touch_n(b.volume());
        Ok(())
    }

    pub fn oracle_query(&mut self, b: &IndexBox) -> Result<i64> {
        b.check_within(self.dim, self.side)?;
        let mut sum = 0i64;
        self.for_each_offset(b, |o| sum = sum.wrapping_add(self.cells[o]));
        self.visits.touch_n(b.volume());
        Ok(sum)
    }
}

impl RangeStructure for DenseOracle {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn side(&self) -> usize {
        self.side
    }

    fn update(&mut self, b: &IndexBox, c: i64) -> Result<()> {
        self.oracle_update(b, c)
    }

    fn query(&mut self, b: &IndexBox) -> Result<i64> {
        self.oracle_query(b)
    }

    fn set_counting(&mut self, on: bool) {
        self.visits.set_enabled(on);
    }

    fn visits(&self) -> u64 {
        self.visits.nodes_visited()
    }

    fn reset_visits(&mut self) {
        self.visits.reset();
    }

    fn cells_allocated(&self) -> u64 {
        self.cells.len() as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bx(lo: &[usize], hi: &[usize]) -> IndexBox {
        IndexBox::new(lo.to_vec(), hi.to_vec()).unwrap()
    }

    #[test]
    fn update_then_query_same_box() {
        let mut o = DenseOracle::new(3, 5).unwrap();
        let b = bx(&[1, 2, 3], &[4, 4, 5]);
        o.oracle_update(&b, -6).unwrap();
        assert_eq!(o.oracle_query(&b).unwrap(), -6 * b.volume() as i64);
        assert_eq!(o.get(&[4, 4, 5]).unwrap(), -6);
        assert_eq!(o.get(&[5, 4, 5]).unwrap(), 0);
    }

    #[test]
    fn disjoint_boxes_do_not_interact() {
        let mut o = DenseOracle::new(2, 6).unwrap();
        o.oracle_update(&bx(&[1, 1], &[2, 6]), 9).unwrap();
        assert_eq!(o.oracle_query(&bx(&[3, 1], &[6, 6])).unwrap(), 0);
    }

    #[test]
    fn wraps_on_overflow() {
        let mut o = DenseOracle::new(1, 4).unwrap();
        o.oracle_update(&bx(&[1], &[4]), i64::MAX).unwrap();
        assert_eq!(
            o.oracle_query(&bx(&[1], &[2])).unwrap(),
            i64::MAX.wrapping_mul(2)
        );
    }

    #[test]
    fn counts_cells() {
        let mut o = DenseOracle::new(2, 6).unwrap();
        o.oracle_update(&bx(&[1, 1], &[2, 3]), 1).unwrap();
        assert_eq!(o.visits(), 6);
    }
}
