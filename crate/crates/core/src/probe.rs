//! Deterministic work counters.
//!
//! Counters replace wall clocks wherever asymptotic behaviour has to be
//! asserted: a [`Probe`] is told about every Fenwick traversal, and a
//! [`VisitCounter`] counts node touches inside the tree baselines.

/// Receives one callback per Fenwick traversal with the number of cells the
/// traversal touched. The unit type is the no-op probe.
pub trait Probe {
    fn point_update(&mut self, _cells: u64) {}
    fn prefix_query(&mut self, _cells: u64) {}
}

impl Probe for () {}

/// Aggregated Fenwick traversal statistics.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct WorkStats {
    pub point_updates: u64,
    pub prefix_queries: u64,
    pub cells_touched: u64,
    /// Largest cell count seen in any single traversal.
    pub max_cells_per_traversal: u64,
}

impl WorkStats {
    pub fn reset(&mut self) {
        *self = Self::default();
    }

    fn traversal(&mut self, cells: u64) {
        self.cells_touched += cells;
        self.max_cells_per_traversal = self.max_cells_per_traversal.max(cells);
    }
}

impl Probe for WorkStats {
    fn point_update(&mut self, cells: u64) {
        self.point_updates += 1;
        self.traversal(cells);
    }

    fn prefix_query(&mut self, cells: u64) {
        self.prefix_queries += 1;
        self.traversal(cells);
    }
}

/// Node-touch counter for the tree baselines. Disabled counters ignore
/// touches, so timing runs do not pay for bookkeeping they do not report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VisitCounter {
    enabled: bool,
    nodes_visited: u64,
}

impl Default for VisitCounter {
    fn default() -> Self {
        Self {
            enabled: true,
            nodes_visited: 0,
        }
    }
}

impl VisitCounter {
    #[inline]
    pub fn touch(&mut self) {
        if self.enabled {
            self.nodes_visited += 1;
        }
    }

    #[inline]
    pub fn touch_n(&mut self, n: u64) {
        if self.enabled {
            self.nodes_visited += n;
        }
    }

    pub fn nodes_visited(&self) -> u64 {
        self.nodes_visited
    }

    pub fn reset(&mut self) {
        self.nodes_visited = 0;
    }

    pub fn set_enabled(&mut self, on: bool) {
        self.enabled = on;
    }

    pub fn is_enabled(&self) -> bool {
        self.enabled
    }
}
