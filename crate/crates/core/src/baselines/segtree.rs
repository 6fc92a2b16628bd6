use crate::structure::RangeStructure;
use crate::{Error, IndexBox, Result, VisitCounter};

/// Lazy-propagation segment tree over `1..=n`.
///
/// Node `1` is the root covering `1..=n_pad`, where `n_pad` is the next power
/// of two; node `k` has children `2k` and `2k + 1`.
#[derive(Debug, Clone)]
pub struct LazySegTree1D {
    n: usize,
    n_pad: usize,
    sum: Vec<i64>,
    tag: Vec<i64>,
    visits: VisitCounter,
}

impl LazySegTree1D {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSide);
        }
        let n_pad = n.next_power_of_two();
        Ok(Self {
            n,
            n_pad,
            sum: vec![0; 2 * n_pad],
            tag: vec![0; 2 * n_pad],
            visits: VisitCounter::default(),
        })
    }

    pub fn padded_side(&self) -> usize {
        self.n_pad
    }

    pub fn seg_update(&mut self, b: &IndexBox, c: i64) -> Result<()> {
        b.check_within(1, self.n)?;
        self.update_node(1, 1, self.n_pad, b.lo()[0], b.hi()[0], c);
        Ok(())
    }

    pub fn seg_query(&mut self, b: &IndexBox) -> Result<i64> {
        b.check_within(1, self.n)?;
        Ok(self.query_node(1, 1, self.n_pad, b.lo()[0], b.hi()[0]))
    }

    fn apply(&mut self, node: usize, len: usize, c: i64) {
        self.sum[node] = self.sum[node].wrapping_add(c.wrapping_mul(len as i64));
        self.tag[node] = self.tag[node].wrapping_add(c);
    }

    fn push(&mut self, node: usize, half: usize) {
        let t = std::mem::take(&mut self.tag[node]);
        if t != 0 {
            self.apply(2 * node, half, t);
            self.apply(2 * node + 1, half, t);
        }
    }

    fn update_node(&mut self, node: usize, l: usize, r: usize, ql: usize, qr: usize, c: i64) {
        self.visits.touch();
        if qr < l || r < ql {
            return;
        }
        if ql <= l && r <= qr {
            self.apply(node, r - l + 1, c);
            return;
        }
        let len = r - l + 1;
        let half = len / 2;
        self.push(node, half);
        let mid = l + half - 1;
        self.update_node(2 * node, l, mid, ql, qr, c);
        self.update_node(2 * node + 1, mid + 1, r, ql, qr, c);
        self.sum[node] = self.sum[2 * node].wrapping_add(self.sum[2 * node + 1]);
    }

    fn query_node(&mut self, node: usize, l: usize, r: usize, ql: usize, qr: usize) -> i64 {
        self.visits.touch();
        if qr < l || r < ql {
            return 0;
        }
        if ql <= l && r <= qr {
            return self.sum[node];
        }
        let len = r - l + 1;
        let half = len / 2;
        self.push(node, half);
        let mid = l + half - 1;
        self.query_node(2 * node, l, mid, ql, qr)
            .wrapping_add(self.query_node(2 * node + 1, mid + 1, r, ql, qr))
    }
}

impl RangeStructure for LazySegTree1D {
    fn name(&self) -> &'static str {
        "segtree1d"
    }

    fn dim(&self) -> usize {
        1
    }

    fn side(&self) -> usize {
        self.n
    }

    fn update(&mut self, b: &IndexBox, c: i64) -> Result<()> {
        self.seg_update(b, c)
    }

    fn query(&mut self, b: &IndexBox) -> Result<i64> {
        self.seg_query(b)
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
        self.sum.len() as u64
    }
}
