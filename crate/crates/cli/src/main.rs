use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;

use vnum_core::classify::DEFAULT_ORACLE_CAP;
use vnum_core::FieldTag;

#[derive(Parser)]
#[command(name = "vnum", version, about = "v-numbers, regularity and Cohen-Macaulay tests for edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every invariant of one graph or clutter.
    Report {
        /// Edge-list file, a file holding one graph6 line, or `-` for stdin.
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Minimal generators of the k-th symbolic power of the edge ideal.
    SymbolicPower {
        file: PathBuf,
        /// The power k (at least 1).
        #[arg(default_value_t = 2)]
        k: u32,
        #[arg(long)]
        json: bool,
    },
    /// Check the embedded table or count edge-critical graphs in a graph6 stream.
    CatalogVerify {
        #[arg(long, value_enum, conflicts_with = "edge_critical", required_unless_present = "edge_critical")]
        table: Option<Table>,
        /// graph6 file of connected graphs (`-` for stdin).
        #[arg(long, value_name = "FILE")]
        edge_critical: Option<PathBuf>,
        /// Fail with exit code 3 unless this many edge-critical graphs have 2-9 vertices.
        #[arg(long, value_name = "N", requires = "edge_critical")]
        expect_total: Option<usize>,
        /// Fail with exit code 3 unless this many edge-critical graphs have 9 vertices.
        #[arg(long, value_name = "N", requires = "edge_critical")]
        expect_nine: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// One report per input line, in input order.
    Batch {
        /// Lines are graph6 strings or paths to edge-list files (`-` for stdin).
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = LineFormat::Auto)]
        format: LineFormat,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Clone)]
pub struct Common {
    /// Coefficient field for regularity and Cohen-Macaulay tests.
    #[arg(long, value_enum, default_value_t = FieldChoice::Both)]
    pub field: FieldChoice,
    /// JSON output tagged with `"schema": "vnum/1"`.
    #[arg(long, conflicts_with = "tsv")]
    pub json: bool,
    /// Tab-separated output with a header row.
    #[arg(long)]
    pub tsv: bool,
    /// Worker threads; the VNUM_THREADS environment variable takes precedence.
    #[arg(long, value_name = "N")]
    pub parallel: Option<usize>,
    /// Largest vertex count for which the polarization oracle runs.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ORACLE_CAP)]
    pub oracle_cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FieldChoice {
    /// The rationals.
    Q,
    /// The two-element field.
    F2,
    /// Both, reported side by side.
    Both,
}

impl FieldChoice {
    pub fn fields(self) -> Vec<FieldTag> {
        match self {
            FieldChoice::Q => vec![FieldTag::Rationals],
            FieldChoice::F2 => vec![FieldTag::Gf2],
            FieldChoice::Both => FieldTag::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Cm36,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LineFormat {
    /// A line naming an existing file is read as an edge list, anything else as graph6.
    Auto,
    Graph6,
    Files,
}

/// Failure classes mapped onto exit codes.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Disagreement(String),
    Assertion(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Disagreement(_) => 2,
            Failure::Assertion(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Disagreement(m) | Failure::Assertion(m) => m,
        }
    }
}

impl From<vnum_core::Error> for Failure {
    fn from(e: vnum_core::Error) -> Self {
        match e {
            vnum_core::Error::RouteDisagreement { .. } => Failure::Disagreement(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>, Failure> {
    match std::env::var("VNUM_THREADS") {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Failure::Input(format!("VNUM_THREADS={v:?} is not a thread count"))),
        _ => Ok(flag),
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let threads = match &cli.command {
        Command::Report { common, .. } | Command::CatalogVerify { common, .. } | Command::Batch { common, .. } => {
            thread_count(common.parallel)?
        }
        Command::SymbolicPower { .. } => thread_count(None)?,
    };
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| Failure::Input(e.to_string()))?;
    }
    match cli.command {
        Command::Report { file, common } => commands::report(&file, &common, out),
        Command::SymbolicPower { file, k, json } => commands::symbolic_power(&file, k, json, out),
        Command::CatalogVerify { table: Some(Table::Cm36), common, .. } => commands::verify_cm36(&common, out),
        Command::CatalogVerify { edge_critical: Some(path), expect_total, expect_nine, common, .. } => {
            commands::count_edge_critical(&path, (expect_total, expect_nine), &common, out)
        }
        Command::CatalogVerify { .. } => Err(Failure::Input("give --table cm36 or --edge-critical FILE".into())),
        Command::Batch { file, format, common } => commands::batch(&file, format, &common, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // usage errors are input errors; clap's own code 2 is reserved here
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("vnum: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
