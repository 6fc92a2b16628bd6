use crate::structure::RangeStructure;
use crate::{Error, IndexBox, Result, VisitCounter};

#[derive(Debug, Clone, Copy, Default)]
struct Node {
    sum: i64,
    /// Pending add for every cell below this node.
    tag: i64,
    /// Index of the first of `2^d` contiguous children; 0 means none yet.
    children: u32,
}

/// Quadtree (`d = 2`) or octree (`d = 3`) with lazy add tags.
///
/// The root covers `[1..=n_pad]^d` with `n_pad` the next power of two of the
/// side length; each internal node splits its cube into `2^d` half-size
/// cubes and leaves are single cells. Nodes live in one arena and are
/// created the first time an update has to descend through their parent, so
/// a childless node always holds the same value in every cell.
#[derive(Debug, Clone)]
pub struct RegionTree {
    dim: usize,
    side: usize,
    n_pad: usize,
    nodes: Vec<Node>,
    visits: VisitCounter,
}

#[derive(Clone, Copy)]
struct Query<'a> {
    lo: &'a [usize],
    hi: &'a [usize],
}

impl RegionTree {
    pub fn new(dim: usize, side: usize) -> Result<Self> {
        if !(2..=3).contains(&dim) {
            return Err(Error::UnsupportedDimension {
                structure: if dim < 2 { "quadtree" } else { "octree" },
                dim,
            });
        }
        if side == 0 {
            return Err(Error::ZeroSide);
        }
        Ok(Self {
            dim,
            side,
            n_pad: side.next_power_of_two(),
            nodes: vec![Node::default()],
            visits: VisitCounter::default(),
        })
    }

    pub fn quadtree(side: usize) -> Result<Self> {
        Self::new(2, side)
    }

    pub fn octree(side: usize) -> Result<Self> {
        Self::new(3, side)
    }

    pub fn padded_side(&self) -> usize {
        self.n_pad
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn region_update(&mut self, b: &IndexBox, c: i64) -> Result<()> {
        b.check_within(self.dim, self.side)?;
        let q = Query {
            lo: b.lo(),
            hi: b.hi(),
        };
        self.update_node(0, [1; 3], self.n_pad, q, c);
        Ok(())
    }

    pub fn region_query(&mut self, b: &IndexBox) -> Result<i64> {
        b.check_within(self.dim, self.side)?;
        let q = Query {
            lo: b.lo(),
            hi: b.hi(),
        };
        Ok(self.query_node(0, [1; 3], self.n_pad, q))
    }

    /// Cells shared by the cube at `lo` with edge `size` and the query box.
    fn overlap(&self, lo: [usize; 3], size: usize, q: Query<'_>) -> u64 {
        let mut vol = 1u64;
        for ((&start, &ql), &qh) in lo[..self.dim].iter().zip(q.lo).zip(q.hi) {
            let a = start.max(ql);
            let b = (start + size - 1).min(qh);
            if a > b {
                return 0;
            }
            vol *= (b - a + 1) as u64;
        }
        vol
    }

    /// Allocates children on first descent, otherwise pushes the pending tag.
    fn split(&mut self, idx: usize, size: usize) -> usize {
        let fanout = 1usize << self.dim;
        let half_vol = ((size / 2) as i64).pow(self.dim as u32);
        let tag = std::mem::take(&mut self.nodes[idx].tag);
        let first = self.nodes[idx].children as usize;
        if first == 0 {
            let first = self.nodes.len();
            let child = Node {
                sum: tag.wrapping_mul(half_vol),
                tag,
                children: 0,
            };
            self.nodes.resize(first + fanout, child);
            self.nodes[idx].children =
                u32::try_from(first).expect("region tree arena exceeds u32 indices");
            first
        } else {
            if tag != 0 {
                for child in &mut self.nodes[first..first + fanout] {
                    child.sum = child.sum.wrapping_add(tag.wrapping_mul(half_vol));
                    child.tag = child.tag.wrapping_add(tag);
                }
            }
            first
        }
    }

    fn child_lo(&self, lo: [usize; 3], half: usize, k: usize) -> [usize; 3] {
        let mut out = lo;
        for (axis, o) in out.iter_mut().enumerate().take(self.dim) {
            *o += (k >> axis & 1) * half;
        }
        out
    }

    fn update_node(&mut self, idx: usize, lo: [usize; 3], size: usize, q: Query<'_>, c: i64) {
        self.visits.touch();
        let overlap = self.overlap(lo, size, q);
        if overlap == 0 {
            return;
        }
        let delta = c.wrapping_mul(overlap as i64);
        if overlap == (size as u64).pow(self.dim as u32) {
            let node = &mut self.nodes[idx];
            node.sum = node.sum.wrapping_add(delta);
            node.tag = node.tag.wrapping_add(c);
            return;
        }
        let first = self.split(idx, size);
        let half = size / 2;
        for k in 0..1usize << self.dim {
            let clo = self.child_lo(lo, half, k);
            self.update_node(first + k, clo, half, q, c);
        }
        let node = &mut self.nodes[idx];
        node.sum = node.sum.wrapping_add(delta);
    }

    fn query_node(&mut self, idx: usize, lo: [usize; 3], size: usize, q: Query<'_>) -> i64 {
        self.visits.touch();
        let overlap = self.overlap(lo, size, q);
        if overlap == 0 {
            return 0;
        }
        let node = self.nodes[idx];
        if overlap == (size as u64).pow(self.dim as u32) {
            return node.sum;
        }
        if node.children == 0 {
            return node.tag.wrapping_mul(overlap as i64);
        }
        let first = self.split(idx, size);
        let half = size / 2;
        let mut total = 0i64;
        for k in 0..1usize << self.dim {
            let clo = self.child_lo(lo, half, k);
            total = total.wrapping_add(self.query_node(first + k, clo, half, q));
        }
        total
    }
}

impl RangeStructure for RegionTree {
    fn name(&self) -> &'static str {
        if self.dim == 2 {
            "quadtree"
        } else {
            "octree"
        }
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn side(&self) -> usize {
        self.side
    }

    fn update(&mut self, b: &IndexBox, c: i64) -> Result<()> {
        self.region_update(b, c)
    }

    fn query(&mut self, b: &IndexBox) -> Result<i64> {
        self.region_query(b)
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
        self.nodes.len() as u64
    }
}
