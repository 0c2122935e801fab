use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ucm_core::verify::MAX_CAP;

use crate::commands::{self, PairKind};
use crate::table::Table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Clones,
    CloneAncilla,
}

#[derive(Parser, Debug)]
#[command(
    name = "ucm",
    version,
    about = "Entanglement in the optimal universal N -> M qubit cloner"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,

    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Two-qubit reduced state (clone-clone or clone-ancilla) and its entanglement
    Pair {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// Sweep M from --m up to this value
        #[arg(long)]
        m_max: Option<u32>,
        #[arg(long, value_enum, default_value = "clones")]
        kind: KindArg,
    },
    /// Clone-ancilla concurrence C(1, M) for M = 2..=m_max
    Fig1 {
        #[arg(long)]
        m_max: u32,
    },
    /// Three-clone mixture weights and partial-transpose verdict
    Tripartite {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// Sweep M from --m up to this value
        #[arg(long)]
        m_max: Option<u32>,
    },
    /// Compare every analytic construction with the dense state-vector simulation
    Verify {
        #[arg(long, default_value_t = MAX_CAP, value_parser = clap::value_parser!(u32).range(1..=MAX_CAP as i64))]
        m_cap: u32,
        #[arg(long, default_value_t = commands::DEFAULT_SEED)]
        seed: u64,
    },
    /// Squared Schmidt amplitudes of the cloner output
    State {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
}

fn render(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    }
}

/// Replaces `path` in one step so readers never see a partial file.
pub fn write_atomically(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot create a file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path)
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => write_atomically(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let table = match cli.command {
        Command::Pair { n, m, m_max, kind } => {
            let kind = match kind {
                KindArg::Clones => PairKind::Clones,
                KindArg::CloneAncilla => PairKind::CloneAncilla,
            };
            commands::pair(n, m, m_max, kind)?
        }
        Command::Fig1 { m_max } => commands::fig1(m_max)?,
        Command::Tripartite { n, m, m_max } => commands::tripartite(n, m, m_max)?,
        Command::State { n, m } => commands::state(n, m)?,
        Command::Verify { m_cap, seed } => {
            let report = commands::verify(m_cap, seed)?;
            emit(cli, &render(&commands::verify_table(&report), cli.format))?;
            if report.all_passed() {
                return Ok(EXIT_OK);
            }
            for o in report.failures() {
                eprintln!(
                    "FAILED N={} M={} check={} deviation={:e} tolerance={:e}",
                    o.n, o.m, o.check, o.deviation, o.tolerance
                );
            }
            return Ok(EXIT_VERIFY_FAILED);
        }
    };
    emit(cli, &render(&table, cli.format))?;
    Ok(EXIT_OK)
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}
