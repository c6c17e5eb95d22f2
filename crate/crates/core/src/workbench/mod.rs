//! The batch driver behind the `coduality` binary.
//!
//! Exit codes: 0 when every verdict passes, 1 when an axiom or adjunction
//! check fails (including inputs that fail certification), 2 for parse
//! and structural errors.

mod commands;
pub mod report;
pub mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::format::{emit, FormatError, Structure};
pub use report::{Report, Section};

#[derive(Parser, Debug)]
#[command(name = "coduality", version, about = "Exact coalgebra workbench: certify, dualize, cotensor, cohom")]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Where to write the emitted structure (or the report, for commands
    /// that emit none).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    /// Include wall-clock timings in the report (makes it nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the certifier for the structure in FILE.
    Check { file: PathBuf },
    /// Apply the duality functor matching the kind in FILE.
    Dual { file: PathBuf },
    /// Cotensor a right comodule L with a comodule or bicomodule M.
    Cotensor { l: PathBuf, m: PathBuf },
    /// Cohom of a bicomodule M and a contramodule N over its right base.
    Cohom { m: PathBuf, n: PathBuf },
    /// Verify the cotensor/cohom adjunction at (L, M, N).
    Adjoint { l: PathBuf, m: PathBuf, n: PathBuf },
    /// Emit a seeded random certified structure (or a mutant of one).
    Random {
        /// One of coalgebra, algebra, comodule, right_comodule,
        /// contramodule, left_module, right_module, bicomodule, tower.
        kind: String,
        /// Base coalgebra: grouplike:N, matrix:N, divided_power:N or trig.
        #[arg(long, default_value = "grouplike:2")]
        coalgebra: String,
        /// Right base for bicomodules (defaults to --coalgebra).
        #[arg(long)]
        right: Option<String>,
        /// Q or GF:p.
        #[arg(long, default_value = "Q")]
        field: String,
        /// Maximum dimension of the generated (co)module.
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Number of transitions, for towers.
        #[arg(long, default_value_t = 3)]
        length: usize,
        /// Change one entry so that the certifier fails.
        #[arg(long)]
        mutate: bool,
    },
    /// Run the randomized invariant suite.
    Selftest {
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
}

/// What a successful command produced.
pub struct Outcome {
    pub report: Report,
    pub output: Option<Structure>,
}

/// Why a command stopped early.
#[derive(Debug)]
pub enum CmdError {
    /// Parse or structural problem; exit 2.
    Input(String),
    /// An input failed certification; the report names the check. Exit 1.
    Rejected(Box<Report>),
    /// A computation broke an invariant it should preserve; exit 1.
    Failure(String),
}

impl From<FormatError> for CmdError {
    fn from(e: FormatError) -> Self {
        CmdError::Input(format!("[{}] {e}", e.class()))
    }
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotCertified { .. } | Error::Internal(_) => CmdError::Failure(e.to_string()),
            Error::Format(f) => f.into(),
            other => CmdError::Input(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// writes to the given streams. Returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn render(cli: &Cli, report: &Report) -> String {
    match cli.format {
        ReportFormat::Text => report.render_text(cli.timing),
        ReportFormat::Json => report.render_json(cli.timing),
    }
}

fn write_out(path: &PathBuf, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    match commands::dispatch(cli) {
        Ok(Outcome { report, output }) => {
            let code = if report.passed() { 0 } else { 1 };
            let text = render(cli, &report);
            match (output, &cli.out) {
                (Some(s), Some(path)) => {
                    write_out(path, &emit(&s))?;
                    stdout.write_all(text.as_bytes()).map_err(io)?;
                }
                (Some(s), None) => {
                    stdout.write_all(emit(&s).as_bytes()).map_err(io)?;
                    stderr.write_all(text.as_bytes()).map_err(io)?;
                }
                (None, Some(path)) => write_out(path, &text)?,
                (None, None) => stdout.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(code)
        }
        Err(CmdError::Rejected(report)) => {
            let text = render(cli, &report);
            match &cli.out {
                Some(path) => write_out(path, &text)?,
                None => stdout.write_all(text.as_bytes()).map_err(io)?,
            }
            if let Some((title, c)) = report.first_failure() {
                let _ = writeln!(stderr, "rejected: {title}: {} fails", c.label());
            }
            Ok(1)
        }
        Err(CmdError::Failure(msg)) => {
            let _ = writeln!(stderr, "failure: {msg}");
            Ok(1)
        }
        Err(CmdError::Input(msg)) => Err(msg),
    }
}
