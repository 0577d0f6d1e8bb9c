//! Command-line front end for `weaving-core`: argument grammar, braid files
//! and report rendering.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use weaving_core::{BraidWord, Limits};

mod commands;
mod output;
pub mod text;

pub use output::{Output, Table};

#[derive(Debug, Parser)]
#[command(name = "weaving", version, about = "Weaving knots: braids, warping degrees, region crossing changes and bound checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Cap on strands (or closure components) for exhaustive searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_strands: Option<u64>,

    /// Cap on faces for the exhaustive region-unknotting search.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub max_faces: Option<u64>,

    /// Words the Markov simplifier may visit.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Where a braid comes from: `p q` for a weaving braid, or `--file`.
#[derive(Debug, Clone, Args)]
pub struct Source {
    pub p: Option<usize>,
    pub q: Option<usize>,
    /// Braid text file (`strands: n` / `word: ...`).
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the weaving braid B_W(p,q) in braid text format.
    Gen { p: usize, q: usize },
    /// Warping count for a base sequence, or the braid warping degree.
    Wd {
        #[command(flatten)]
        source: Source,
        /// 1-based strand order, e.g. 1,3,5,2,4.
        #[arg(long)]
        seq: Option<String>,
    },
    /// Warping degree over base sequences that follow the closure.
    ClosedWd {
        #[command(flatten)]
        source: Source,
    },
    /// Warping degree of the closure diagram, optionally at given base edges.
    DiagramWd {
        #[command(flatten)]
        source: Source,
        /// Edge ids, one per component.
        #[arg(long)]
        base: Option<String>,
    },
    /// Export the closure diagram.
    Regions {
        #[command(flatten)]
        source: Source,
    },
    /// Apply region crossing changes and print the resulting braid.
    Rcc {
        #[command(flatten)]
        source: Source,
        /// Region labels, e.g. r1_2,r2_1,s1.
        #[arg(long)]
        regions: String,
    },
    /// Region warping degree of a braid.
    Dr {
        #[command(flatten)]
        source: Source,
    },
    /// Exact region unknotting number by exhaustive search.
    Ur {
        #[command(flatten)]
        source: Source,
    },
    /// Isolate-region number.
    Isolate {
        #[command(flatten)]
        source: Source,
    },
    /// Linking matrix and properness.
    Lk {
        #[command(flatten)]
        source: Source,
    },
    /// Certify the closure trivial or nontrivial.
    Certify {
        #[command(flatten)]
        source: Source,
    },
    /// Bound catalog for the weaving knot W(p,q).
    Bounds { p: usize, q: usize },
    /// Run every applicable check for W(p,q).
    Verify { p: usize, q: usize },
    /// Run `verify` over 3 <= p <= pmax, 2 <= q <= qmax.
    VerifyGrid { pmax: usize, qmax: usize },
}

/// Failure classes, one per nonzero exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Precondition(String),
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Precondition(m) | CliError::Cap(m) => f.write_str(m),
        }
    }
}

impl From<weaving_core::Error> for CliError {
    fn from(e: weaving_core::Error) -> Self {
        match e {
            weaving_core::Error::CertifierInconclusive { .. } => CliError::Cap(e.to_string()),
            e if e.is_cap() => CliError::Cap(e.to_string()),
            e => CliError::Precondition(e.to_string()),
        }
    }
}

impl Cli {
    pub fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(n) = self.max_strands {
            l.max_strands = n as usize;
        }
        if let Some(n) = self.max_faces {
            l.max_faces = n as usize;
        }
        if let Some(n) = self.budget {
            l.budget = n as usize;
        }
        l
    }
}

impl Source {
    pub fn braid(&self) -> Result<BraidWord, CliError> {
        match (self.p, self.q, &self.file) {
            (Some(p), Some(q), None) => Ok(BraidWord::weaving(p, q)?),
            (None, None, Some(path)) => {
                let s = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Precondition(format!("{}: {e}", path.display())))?;
                text::parse_braid(&s).map_err(|e| CliError::Precondition(format!("{}: {e}", path.display())))
            }
            _ => Err(CliError::Usage("give either `p q` or `--file <path>`".to_string())),
        }
    }
}

/// Runs the command and returns the rendered result.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let out = commands::dispatch(cli)?;
    out.render(cli.format)
}

/// Full entry point: parses `argv`, runs, writes the output and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = execute(&cli).and_then(|s| match &cli.output {
        Some(path) => std::fs::write(path, s).map_err(|e| CliError::Precondition(format!("{}: {e}", path.display()))),
        None => std::io::stdout().write_all(s.as_bytes()).map_err(|e| CliError::Precondition(e.to_string())),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Parses and runs in-process, returning the exit code and the rendered
/// output (or the error message).
pub fn run_captured<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => match execute(&cli) {
            Ok(s) => (0, s),
            Err(e) => (e.exit_code(), e.to_string()),
        },
        Err(e) => (if e.use_stderr() { 1 } else { 0 }, e.to_string()),
    }
}
