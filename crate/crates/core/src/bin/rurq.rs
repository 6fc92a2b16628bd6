use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rurq_core::bench::{
    emit_csv, emit_markdown, generate_workload, run_bench, BenchReport, WorkloadConfig,
};
use rurq_core::opscript::{format_results, parse_script, run_script, verify, OpScript};
use rurq_core::StructureKind;

/// Range-update range-query toolkit. Coordinates are 1-based and inclusive.
#[derive(Parser)]
#[command(name = "rurq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a script on one structure and print one line per query.
    Run {
        /// Script path, or `-` for standard input.
        #[arg(long)]
        script: String,
        #[arg(long, default_value = "rurq")]
        structure: StructureKind,
    },
    /// Cross-check every applicable structure against the dense oracle.
    Verify {
        #[arg(long, required_unless_present = "random", conflicts_with = "random")]
        script: Option<String>,
        #[arg(long)]
        random: bool,
        #[command(flatten)]
        workload: WorkloadArgs,
    },
    /// Time seeded random workloads.
    Bench {
        #[arg(long)]
        dim: usize,
        /// Comma-separated side lengths.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 100_000)]
        ops: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Comma-separated structure names; defaults to all that support `--dim`.
        #[arg(long, value_delimiter = ',')]
        structures: Vec<StructureKind>,
        /// Fraction of operations that are updates.
        #[arg(long, default_value_t = 0.5)]
        mix: f64,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        #[arg(long)]
        count_visits: bool,
    },
    /// Print a seeded random script.
    Generate {
        #[command(flatten)]
        workload: WorkloadArgs,
    },
}

#[derive(Args)]
struct WorkloadArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 1000)]
    ops: usize,
    #[arg(long, default_value_t = 0.5)]
    mix: f64,
}

impl WorkloadArgs {
    fn config(&self) -> WorkloadConfig {
        WorkloadConfig::new(self.dim, self.n, self.ops, self.seed).with_update_fraction(self.mix)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Markdown,
}

fn read_script(path: &str) -> Result<OpScript, String> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    parse_script(&text).map_err(|e| format!("{path}: {e}"))
}

fn write_stdout(s: &str) -> Result<(), String> {
    io::stdout()
        .lock()
        .write_all(s.as_bytes())
        .map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Run { script, structure } => {
            let s = read_script(&script)?;
            let results = run_script(&s, structure).map_err(|e| e.to_string())?;
            write_stdout(&format_results(&results))?;
            Ok(true)
        }
        Command::Verify {
            script,
            random,
            workload,
        } => {
            let s = match script {
                Some(path) => read_script(&path)?,
                None => {
                    debug_assert!(random);
                    generate_workload(&workload.config()).map_err(|e| e.to_string())?
                }
            };
            let report = verify(&s).map_err(|e| e.to_string())?;
            write_stdout(&format!("{report}\n"))?;
            Ok(report.is_ok())
        }
        Command::Bench {
            dim,
            n,
            ops,
            seed,
            structures,
            mix,
            format,
            count_visits,
        } => {
            let structures = if structures.is_empty() {
                StructureKind::applicable(dim)
                    .into_iter()
                    .filter(|&k| k != StructureKind::Oracle)
                    .collect()
            } else {
                structures
            };
            let mut report = BenchReport::default();
            for side in n {
                let cfg = WorkloadConfig::new(dim, side, ops, seed).with_update_fraction(mix);
                let r = run_bench(&cfg, &structures, count_visits).map_err(|e| e.to_string())?;
                for row in &r.rows {
                    eprintln!(
                        "{} d={} n={}: build {:.1} ms, run {:.1} ms",
                        row.structure, row.dim, row.side, row.build_millis, row.millis
                    );
                }
                report.extend(r);
            }
            let out = match format {
                Format::Csv => emit_csv(&report),
                Format::Markdown => emit_markdown(&report),
            };
            write_stdout(&out)?;
            Ok(true)
        }
        Command::Generate { workload } => {
            let s = generate_workload(&workload.config()).map_err(|e| e.to_string())?;
            write_stdout(&s.to_string())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
