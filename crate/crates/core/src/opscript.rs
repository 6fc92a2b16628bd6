//! Plain-text operation scripts.
//!
//! ```text
//! # comments run to end of line
//! init <d> <n>
//! update <l1> .. <ld> <r1> .. <rd> <c>
//! query  <l1> .. <ld> <r1> .. <rd>
//! ```
//!
//! Coordinates are 1-based and inclusive; `c` is a signed 64-bit decimal.
//! Running a script prints one decimal line per `query`, in order.

use std::fmt;

use crate::{Error, IndexBox, RangeStructure, StructureKind, MAX_DIM};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Operation {
    Update { region: IndexBox, c: i64 },
    Query { region: IndexBox },
}

impl Operation {
    pub fn region(&self) -> &IndexBox {
        match self {
            Operation::Update { region, .. } | Operation::Query { region } => region,
        }
    }

    pub fn is_query(&self) -> bool {
        matches!(self, Operation::Query { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpScript {
    pub dim: usize,
    pub side: usize,
    pub ops: Vec<Operation>,
}

impl OpScript {
    pub fn new(dim: usize, side: usize) -> Self {
        Self {
            dim,
            side,
            ops: Vec::new(),
        }
    }

    /// Indices into `ops` of every query, in order.
    pub fn query_indices(&self) -> Vec<usize> {
        (0..self.ops.len())
            .filter(|&i| self.ops[i].is_query())
            .collect()
    }
}

impl fmt::Display for OpScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "init {} {}", self.dim, self.side)?;
        for op in &self.ops {
            let r = op.region();
            let coords = r.lo().iter().chain(r.hi());
            match op {
                Operation::Update { c, .. } => {
                    f.write_str("update")?;
                    for x in coords {
                        write!(f, " {x}")?;
                    }
                    writeln!(f, " {c}")?;
                }
                Operation::Query { .. } => {
                    f.write_str("query")?;
                    for x in coords {
                        write!(f, " {x}")?;
                    }
                    writeln!(f)?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ScriptError {
    pub line: usize,
    pub kind: ScriptErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScriptErrorKind {
    #[error("expected `init <d> <n>` before any operation")]
    MissingHeader,
    #[error("{0}")]
    Syntax(String),
    #[error(transparent)]
    Invalid(#[from] Error),
}

fn err(line: usize, kind: impl Into<ScriptErrorKind>) -> ScriptError {
    ScriptError {
        line,
        kind: kind.into(),
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> ScriptError {
    err(line, ScriptErrorKind::Syntax(msg.into()))
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T, ScriptError> {
    tok.parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_script(text: &str) -> Result<OpScript, ScriptError> {
    let mut script: Option<OpScript> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        let Some((&head, args)) = toks.split_first() else {
            continue;
        };
        let Some(s) = script.as_mut() else {
            if head != "init" {
                return Err(err(line, ScriptErrorKind::MissingHeader));
            }
            if args.len() != 2 {
                return Err(syntax(line, "`init` takes exactly two arguments"));
            }
            let dim: usize = parse_num(line, args[0], "dimension")?;
            let side: usize = parse_num(line, args[1], "side length")?;
            if dim == 0 {
                return Err(err(line, Error::ZeroDimension));
            }
            if dim > MAX_DIM {
                return Err(err(line, Error::DimensionTooLarge(dim)));
            }
            if side == 0 {
                return Err(err(line, Error::ZeroSide));
            }
            script = Some(OpScript::new(dim, side));
            continue;
        };
        let d = s.dim;
        let (want, is_update) = match head {
            "update" => (2 * d + 1, true),
            "query" => (2 * d, false),
            "init" => return Err(syntax(line, "duplicate `init`")),
            other => return Err(syntax(line, format!("unknown operation `{other}`"))),
        };
        if args.len() != want {
            return Err(syntax(
                line,
                format!(
                    "`{head}` in {d} dimensions takes {want} arguments, got {}",
                    args.len()
                ),
            ));
        }
        let coords = args[..2 * d]
            .iter()
            .map(|t| parse_num::<usize>(line, t, "coordinate"))
            .collect::<Result<Vec<_>, _>>()?;
        let region =
            IndexBox::new(coords[..d].to_vec(), coords[d..].to_vec()).map_err(|e| err(line, e))?;
        region.check_within(d, s.side).map_err(|e| err(line, e))?;
        s.ops.push(if is_update {
            Operation::Update {
                region,
                c: parse_num(line, args[2 * d], "constant")?,
            }
        } else {
            Operation::Query { region }
        });
    }
    script.ok_or_else(|| err(1, ScriptErrorKind::MissingHeader))
}

/// Executes `script` in order on `structure`, returning one value per query.
pub fn run_on(script: &OpScript, structure: &mut dyn RangeStructure) -> crate::Result<Vec<i64>> {
    if structure.dim() != script.dim || structure.side() != script.side {
        return Err(Error::InvalidConfig(format!(
            "script is {}-dimensional with side {}, structure is {}-dimensional with side {}",
            script.dim,
            script.side,
            structure.dim(),
            structure.side()
        )));
    }
    let mut out = Vec::new();
    for op in &script.ops {
        match op {
            Operation::Update { region, c } => structure.update(region, *c)?,
            Operation::Query { region } => out.push(structure.query(region)?),
        }
    }
    Ok(out)
}

/// Builds a fresh `kind` structure and runs `script` on it.
pub fn run_script(script: &OpScript, kind: StructureKind) -> crate::Result<Vec<i64>> {
    let mut s = kind.build(script.dim, script.side)?;
    s.set_counting(false);
    run_on(script, s.as_mut())
}

/// One decimal per line.
pub fn format_results(results: &[i64]) -> String {
    let mut out = String::with_capacity(results.len() * 8);
    for r in results {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    /// Index into the script's operation list.
    pub op_index: usize,
    pub structure: StructureKind,
    pub expected: i64,
    pub actual: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub ops: usize,
    pub queries: usize,
    pub structures: Vec<StructureKind>,
    pub divergence: Option<Divergence>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.divergence.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.divergence {
            None => {
                let names: Vec<&str> = self.structures.iter().map(|k| k.as_str()).collect();
                write!(
                    f,
                    "OK {} ops ({} queries) on {}",
                    self.ops,
                    self.queries,
                    names.join(",")
                )
            }
            Some(d) => write!(
                f,
                "DIVERGENCE at op {}: {} returned {}, oracle returned {}",
                d.op_index, d.structure, d.actual, d.expected
            ),
        }
    }
}

/// First query whose `actual` value differs from `expected`, as an op index.
pub fn first_divergence(
    script: &OpScript,
    expected: &[i64],
    actual: &[i64],
) -> Option<(usize, i64, i64)> {
    script
        .query_indices()
        .into_iter()
        .zip(expected.iter().zip(actual))
        .find(|(_, (e, a))| e != a)
        .map(|(i, (e, a))| (i, *e, *a))
}

/// Runs `script` on the oracle and every other structure that supports its
/// dimension, and reports the earliest disagreement.
pub fn verify(script: &OpScript) -> crate::Result<VerifyReport> {
    let expected = run_script(script, StructureKind::Oracle)?;
    let structures = StructureKind::applicable(script.dim);
    let mut candidates = Vec::new();
    for &kind in structures.iter().filter(|&&k| k != StructureKind::Oracle) {
        candidates.push((kind, run_script(script, kind)?));
    }
    Ok(compare(script, &expected, &candidates, structures))
}

/// Earliest divergence of any candidate from `expected`.
pub fn compare(
    script: &OpScript,
    expected: &[i64],
    candidates: &[(StructureKind, Vec<i64>)],
    structures: Vec<StructureKind>,
) -> VerifyReport {
    let divergence = candidates
        .iter()
        .filter_map(|(kind, actual)| {
            first_divergence(script, expected, actual).map(|(op_index, expected, actual)| {
                Divergence {
                    op_index,
                    structure: *kind,
                    expected,
                    actual,
                }
            })
        })
        .min_by_key(|d| d.op_index);
    VerifyReport {
        ops: script.ops.len(),
        queries: expected.len(),
        structures,
        divergence,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const RUNNING: &str = "init 1 10\nupdate 3 5 4\nquery 3 5\n";

    #[test]
    fn parses_running_example() {
        let s = parse_script(RUNNING).unwrap();
        assert_eq!((s.dim, s.side, s.ops.len()), (1, 10, 2));
        assert_eq!(
            s.ops[0],
            Operation::Update {
                region: IndexBox::new(vec![3], vec![5]).unwrap(),
                c: 4
            }
        );
    }

    #[test]
    fn runs_running_example_everywhere() {
        let s = parse_script(RUNNING).unwrap();
        for kind in StructureKind::applicable(1) {
            assert_eq!(run_script(&s, kind).unwrap(), vec![12], "{kind}");
        }
        assert_eq!(
            format_results(&run_script(&s, StructureKind::Rurq).unwrap()),
            "12\n"
        );
    }

    #[test]
    fn single_full_query() {
        let s = parse_script("init 2 4\nquery 1 1 4 4").unwrap();
        assert_eq!(s.ops.len(), 1);
        assert_eq!(run_script(&s, StructureKind::Quadtree).unwrap(), vec![0]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let s = parse_script("# header\n\ninit 1 4 # d n\n  update 1 2 -3 # trailing\nquery 1 4\n")
            .unwrap();
        assert_eq!(run_script(&s, StructureKind::Rurq).unwrap(), vec![-6]);
    }

    #[test]
    fn error_lines() {
        let e = parse_script("init 1 10\nupdate 5 3 1").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(
            e.kind,
            ScriptErrorKind::Invalid(Error::EmptyBox { .. })
        ));

        let e = parse_script("init 2 4\nquery 1 1 4 5").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(
            e.kind,
            ScriptErrorKind::Invalid(Error::OutOfRange { .. })
        ));

        let e = parse_script("init 1 4\nquery 0 1").unwrap_err();
        assert!(matches!(
            e.kind,
            ScriptErrorKind::Invalid(Error::OutOfRange { value: 0, .. })
        ));

        let e = parse_script("query 1 1").unwrap_err();
        assert_eq!(
            e,
            ScriptError {
                line: 1,
                kind: ScriptErrorKind::MissingHeader
            }
        );
        assert_eq!(
            parse_script("# nothing\n").unwrap_err().kind,
            ScriptErrorKind::MissingHeader
        );

        let e = parse_script("init 1 4\n\nupdate 1 2 99999999999999999999").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(e.kind, ScriptErrorKind::Syntax(_)));

        for bad in [
            "init 1",
            "init 0 4",
            "init 1 0",
            "init 17 1",
            "init 1 4\nupdate 1 2",
            "init 1 4\ninit 1 4",
            "init 1 4\nscan 1 2",
            "init x 4",
        ] {
            assert!(parse_script(bad).is_err(), "{bad:?}");
        }
        assert_eq!(
            parse_script("init 1 10\nupdate 5 3 1")
                .unwrap_err()
                .to_string(),
            "line 2: empty box on axis 0: lo 5 > hi 3"
        );
    }

    #[test]
    fn formats_back() {
        let text = "init 2 5\nupdate 1 2 3 4 -7\nquery 2 2 5 5\n";
        assert_eq!(parse_script(text).unwrap().to_string(), text);
    }

    #[test]
    fn unsupported_dimension() {
        let s = parse_script("init 2 4\nquery 1 1 4 4").unwrap();
        assert!(matches!(
            run_script(&s, StructureKind::SegTree1d),
            Err(Error::UnsupportedDimension { .. })
        ));
    }

    #[test]
    fn query_only_script_is_all_zero() {
        let s = parse_script("init 3 3\nquery 1 1 1 3 3 3\nquery 2 2 2 2 2 2\n").unwrap();
        for kind in StructureKind::applicable(3) {
            assert_eq!(run_script(&s, kind).unwrap(), vec![0, 0]);
        }
    }

    #[test]
    fn verify_flags_corrupted_value() {
        let s = parse_script("init 1 8\nquery 1 8\nupdate 2 4 1\nquery 1 8\nquery 3 3\n").unwrap();
        let report = verify(&s).unwrap();
        assert!(report.is_ok(), "{report}");
        assert_eq!(report.queries, 3);

        let expected = run_script(&s, StructureKind::Oracle).unwrap();
        let mut corrupted = expected.clone();
        corrupted[1] += 1;
        let report = compare(
            &s,
            &expected,
            &[(StructureKind::Rurq, corrupted)],
            vec![StructureKind::Rurq, StructureKind::Oracle],
        );
        let d = report.divergence.unwrap();
        assert_eq!(d.op_index, 2);
        assert_eq!((d.expected, d.actual), (3, 4));
    }
}
