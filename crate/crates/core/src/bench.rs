//! Seeded random workloads, timed runs and report formatting.
//!
//! Each operation draws, in order: one `unit()` deciding update vs query
//! (update when below the update fraction), then for every axis two uniform
//! coordinates that are sorted into `lo`/`hi`, then for updates one constant
//! uniform in `[-10^6, 10^6]`.

use std::fmt::Write as _;
use std::time::Instant;

use crate::opscript::{run_on, OpScript, Operation};
use crate::rng::WorkloadRng;
use crate::{Error, IndexBox, Result, StructureKind, MAX_DIM};

#[derive(Debug, Clone, PartialEq)]
pub struct WorkloadConfig {
    pub dim: usize,
    pub side: usize,
    pub ops: usize,
    pub seed: u64,
    /// Probability that an operation is an update.
    pub update_fraction: f64,
}

impl WorkloadConfig {
    pub fn new(dim: usize, side: usize, ops: usize, seed: u64) -> Self {
        Self {
            dim,
            side,
            ops,
            seed,
            update_fraction: 0.5,
        }
    }

    pub fn with_update_fraction(mut self, f: f64) -> Self {
        self.update_fraction = f;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if self.dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(self.dim));
        }
        if self.side == 0 {
            return Err(Error::ZeroSide);
        }
        if !(0.0..=1.0).contains(&self.update_fraction) {
            return Err(Error::InvalidConfig(format!(
                "update fraction {} is outside [0, 1]",
                self.update_fraction
            )));
        }
        Ok(())
    }
}

/// Draws a box with two independent uniform coordinates per axis.
pub fn random_box(rng: &mut WorkloadRng, dim: usize, side: usize) -> IndexBox {
    let mut lo = Vec::with_capacity(dim);
    let mut hi = Vec::with_capacity(dim);
    for _ in 0..dim {
        let a = rng.coord(side);
        let b = rng.coord(side);
        lo.push(a.min(b));
        hi.push(a.max(b));
    }
    IndexBox::new(lo, hi).expect("sorted corners form a box")
}

pub fn generate_workload(cfg: &WorkloadConfig) -> Result<OpScript> {
    cfg.validate()?;
    let mut rng = WorkloadRng::new(cfg.seed);
    let mut script = OpScript::new(cfg.dim, cfg.side);
    script.ops.reserve(cfg.ops);
    for _ in 0..cfg.ops {
        let is_update = rng.unit() < cfg.update_fraction;
        let region = random_box(&mut rng, cfg.dim, cfg.side);
        script.ops.push(if is_update {
            Operation::Update {
                region,
                c: rng.constant(),
            }
        } else {
            Operation::Query { region }
        });
    }
    Ok(script)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub structure: StructureKind,
    pub dim: usize,
    pub side: usize,
    pub ops: usize,
    pub seed: u64,
    /// Time for the operations only.
    pub millis: f64,
    pub ops_per_sec: f64,
    /// Zero unless the run counted visits.
    pub visits: u64,
    pub cells_allocated: u64,
    /// Time to construct the structure.
    pub build_millis: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn extend(&mut self, other: BenchReport) {
        self.rows.extend(other.rows);
    }

    /// Orders rows by `(d, n, structure)`.
    pub fn sort(&mut self) {
        self.rows.sort_by_key(|r| (r.dim, r.side, r.structure));
    }

    pub fn row(&self, structure: StructureKind, side: usize) -> Option<&BenchRow> {
        self.rows
            .iter()
            .find(|r| r.structure == structure && r.side == side)
    }
}

/// Runs the same generated workload on each structure in turn.
pub fn run_bench(
    cfg: &WorkloadConfig,
    structures: &[StructureKind],
    count_visits: bool,
) -> Result<BenchReport> {
    if let Some(k) = structures.iter().find(|k| !k.supports(cfg.dim)) {
        return Err(Error::UnsupportedDimension {
            structure: k.as_str(),
            dim: cfg.dim,
        });
    }
    let script = generate_workload(cfg)?;
    let mut report = BenchReport::default();
    for &kind in structures {
        let start = Instant::now();
        let mut s = kind.build(cfg.dim, cfg.side)?;
        let build_millis = start.elapsed().as_secs_f64() * 1e3;
        s.set_counting(count_visits);
        s.reset_visits();
        let start = Instant::now();
        let results = run_on(&script, s.as_mut())?;
        let elapsed = start.elapsed().as_secs_f64();
        std::hint::black_box(results);
        report.rows.push(BenchRow {
            structure: kind,
            dim: cfg.dim,
            side: cfg.side,
            ops: cfg.ops,
            seed: cfg.seed,
            millis: elapsed * 1e3,
            ops_per_sec: if elapsed > 0.0 {
                cfg.ops as f64 / elapsed
            } else {
                0.0
            },
            visits: if count_visits { s.visits() } else { 0 },
            cells_allocated: s.cells_allocated(),
            build_millis,
        });
    }
    Ok(report)
}

pub const CSV_HEADER: &str =
    "structure,d,n,ops,seed,millis,ops_per_sec,visits,cells_allocated,build_millis";

pub fn emit_csv(report: &BenchReport) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.structure,
            r.dim,
            r.side,
            r.ops,
            r.seed,
            r.millis,
            r.ops_per_sec,
            r.visits,
            r.cells_allocated,
            r.build_millis
        );
    }
    out
}

pub fn parse_csv(text: &str) -> Result<BenchReport> {
    let bad = |line: usize, what: &str| Error::InvalidConfig(format!("csv line {line}: {what}"));
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == CSV_HEADER => {}
        _ => return Err(bad(1, "missing header")),
    }
    let mut report = BenchReport::default();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').map(str::trim).collect();
        if f.len() != 10 {
            return Err(bad(line_no, "expected 10 fields"));
        }
        macro_rules! num {
            ($i:expr) => {
                f[$i].parse().map_err(|_| bad(line_no, "bad number"))?
            };
        }
        report.rows.push(BenchRow {
            structure: f[0].parse()?,
            dim: num!(1),
            side: num!(2),
            ops: num!(3),
            seed: num!(4),
            millis: num!(5),
            ops_per_sec: num!(6),
            visits: num!(7),
            cells_allocated: num!(8),
            build_millis: num!(9),
        });
    }
    Ok(report)
}

/// One row per `n`, one column per `(structure, d)` in first-seen order.
/// When any row counted visits a second table with visit totals follows.
pub fn emit_markdown(report: &BenchReport) -> String {
    let mut columns: Vec<(StructureKind, usize)> = Vec::new();
    let mut sides: Vec<usize> = Vec::new();
    for r in &report.rows {
        if !columns.contains(&(r.structure, r.dim)) {
            columns.push((r.structure, r.dim));
        }
        if !sides.contains(&r.side) {
            sides.push(r.side);
        }
    }
    sides.sort_unstable();
    let cell = |kind: StructureKind, dim: usize, side: usize| {
        report
            .rows
            .iter()
            .find(|r| r.structure == kind && r.dim == dim && r.side == side)
    };
    let mut out = String::new();
    let table = |out: &mut String, title: &str, value: &dyn Fn(&BenchRow) -> String| {
        out.push_str("| n |");
        for (k, d) in &columns {
            let _ = write!(out, " {k} {d}D {title} |");
        }
        out.push_str("\n|---|");
        for _ in &columns {
            out.push_str("---|");
        }
        out.push('\n');
        for &n in &sides {
            let _ = write!(out, "| {n} |");
            for &(k, d) in &columns {
                match cell(k, d, n) {
                    Some(r) => {
                        let _ = write!(out, " {} |", value(r));
                    }
                    None => out.push_str(" - |"),
                }
            }
            out.push('\n');
        }
    };
    table(&mut out, "(ms)", &|r| format!("{:.1}", r.millis));
    if report.rows.iter().any(|r| r.visits > 0) {
        out.push('\n');
        table(&mut out, "visits", &|r| r.visits.to_string());
    }
    out
}
