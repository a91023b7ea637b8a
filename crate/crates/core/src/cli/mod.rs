//! Command-line interface.
//!
//! Exit codes: 0 success, 1 parse or validation error, 2 classification
//! unknown within the search bounds, 3 digest mismatch between a
//! certificate and a problem file, 4 verification failure.
//!
//! Errors are printed to stderr as `error[<tag>]: <message>`. The tag names
//! the failing stage; rejected moduli (`modulus`) and non-dominant maps
//! (`non-dominant`) have their own tags.

pub mod certfile;
pub mod problem;
pub mod tools;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::classify::{classify, ClassifyOptions};
use crate::error::SplitError;

use certfile::CertificateFile;
use problem::Problem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Modulus(String),
    #[error("{0}")]
    Field(String),
    #[error("{0}")]
    NonDominant(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Unknown(String),
    #[error("certificate digest {expected} does not match problem digest {actual}")]
    Digest { expected: String, actual: String },
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Unknown(_) => 2,
            CliError::Digest { .. } => 3,
            CliError::Verification(_) => 4,
            _ => 1,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Parse(_) => "parse",
            CliError::Modulus(_) => "modulus",
            CliError::Field(_) => "field",
            CliError::NonDominant(_) => "non-dominant",
            CliError::Invalid(_) => "invalid",
            CliError::Unknown(_) => "unknown",
            CliError::Digest { .. } => "digest",
            CliError::Verification(_) => "verify",
        }
    }
}

impl From<SplitError> for CliError {
    fn from(e: SplitError) -> Self {
        match e {
            SplitError::NonDominant => CliError::NonDominant(e.to_string()),
            SplitError::Unknown { .. } | SplitError::NonCentralEigenvalues(_) => {
                CliError::Unknown(format!("split: {e}"))
            }
            SplitError::Algebra(crate::error::AlgebraError::Capacity(_)) => {
                CliError::Unknown(format!("split: {e}"))
            }
            other => CliError::Invalid(format!("split: {other}")),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "frobdyn",
    version,
    about = "Orbit classification for additive endomorphisms of G_a^N over finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the map of a problem file as A, B or C and write a certificate.
    Classify(ClassifyArgs),
    /// Check a certificate against the problem file it was produced from.
    Verify {
        certificate: PathBuf,
        problem: PathBuf,
    },
    /// Individual computations.
    #[command(subcommand)]
    Tools(tools::ToolCommand),
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    pub problem: PathBuf,
    /// Transcendence degree of the field of definition (overrides the file).
    #[arg(long)]
    pub d: Option<usize>,
    /// Orbit length for the density report.
    #[arg(long = "density-M")]
    pub density_m: Option<usize>,
    /// Degree bound for the density report.
    #[arg(long = "density-D")]
    pub density_d: Option<usize>,
    /// Seed for the random specializations of the density trials.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of density trials.
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
    /// Write the certificate here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub(crate) fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub(crate) fn load_problem(path: &Path) -> Result<(Vec<u8>, Problem), CliError> {
    let bytes = read(path)?;
    let s = std::str::from_utf8(&bytes)
        .map_err(|_| CliError::Parse("problem file is not UTF-8".into()))?;
    let p = Problem::parse(s)?;
    Ok((bytes, p))
}

/// Runs `classify` and returns the certificate file.
pub fn classify_problem(
    source: &[u8],
    p: &Problem,
    args: &ClassifyArgs,
) -> Result<CertificateFile, CliError> {
    let d = args.d.unwrap_or(p.d);
    let mut opts = ClassifyOptions::new(d);
    if let Some(m) = args.density_m.or(p.density_m) {
        opts.density_m = m;
    }
    if let Some(dd) = args.density_d.or(p.density_d) {
        opts.density_d = dd;
    }
    opts.density.seed = args.seed;
    opts.density.trials = args.trials;
    let mut p = p.clone();
    p.d = d;
    let v = classify(&p.map, &opts)?;
    Ok(CertificateFile::from_verdict(&p, source, &v, &opts.density))
}

fn cmd_classify(args: &ClassifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (bytes, p) = load_problem(&args.problem)?;
    let cert = classify_problem(&bytes, &p, args)?;
    let text = cert.to_toml();
    match &args.out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            writeln!(out, "verdict = {}", cert.verdict).map_err(io)?;
            writeln!(out, "certificate = {}", path.display()).map_err(io)?;
        }
        None => write!(out, "{text}").map_err(io)?,
    }
    Ok(())
}

fn cmd_verify(cert: &Path, problem: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let c = read(cert)?;
    let c =
        std::str::from_utf8(&c).map_err(|_| CliError::Parse("certificate is not UTF-8".into()))?;
    let cert = CertificateFile::from_toml(c)?;
    let v = cert.verify(&read(problem)?)?;
    writeln!(out, "verdict = {}", cert.verdict).map_err(io)?;
    writeln!(out, "identity = {}", v.identity).map_err(io)?;
    if v.ok {
        writeln!(out, "result = ok").map_err(io)?;
        Ok(())
    } else {
        writeln!(out, "result = fail").map_err(io)?;
        Err(CliError::Verification(
            v.reason.unwrap_or_else(|| "verification failed".into()),
        ))
    }
}

pub(crate) fn io(e: std::io::Error) -> CliError {
    CliError::Io(e.to_string())
}

/// Parses `args` (including the program name) and runs the command,
/// returning the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let res = match &cli.command {
        Command::Classify(a) => cmd_classify(a, out),
        Command::Verify {
            certificate,
            problem,
        } => cmd_verify(certificate, problem, out),
        Command::Tools(t) => tools::run(t, out),
    };
    match res {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.tag());
            e.exit_code()
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
