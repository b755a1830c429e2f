mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heckeform::exact::RationalC;
use heckeform::{Error, MultiPartition, Partition};

/// Exact Specht modules, invariant Hermitian forms and unitarity loci for
/// Hecke algebras of the symmetric group.
///
/// Exit codes: 0 success, 1 computed result disagrees with the predicted
/// locus, 2 usage or parse error, 3 size guard, 4 internal failure.
#[derive(Parser, Debug)]
#[command(name = "heckeform", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Worker threads (default: available cores).
    #[arg(long, env = "HECKE_THREADS", global = true)]
    threads: Option<usize>,

    /// Starting precision of the certified sign test, in bits.
    #[arg(long, env = "HECKE_PRECISION_BITS", global = true)]
    precision_start_bits: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gram matrix of the Murphy basis, symbolic or specialized.
    Gram(GramArgs),
    /// Unitarity verdict for one partition at one point.
    Unitary(PointArgs),
    /// Scan the unitarity locus of one partition.
    Locus(LocusArgs),
    /// Scan every partition of 2 ≤ n ≤ n_max against the predicted loci.
    Verify(VerifyArgs),
    /// Jantzen filtration dimensions at one point.
    Jantzen(PointArgs),
    /// Symbolic Gram determinant and its cyclotomic factors.
    Det(ShapeArgs),
}

#[derive(Args, Debug, Clone)]
pub struct GramArgs {
    /// Partition `3,1`, or multipartition `2|1` (components separated by `|`).
    #[arg(long)]
    pub lambda: String,
    /// Specialize at q = exp(2πic).
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// For multipartitions: q_k = exp(2πi c_k), comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub params: Vec<String>,
    /// Emit the Hermitian form instead of the bilinear Gram matrix.
    #[arg(long)]
    pub hermitian: bool,
    /// Also write the JSON output to this file.
    #[arg(long)]
    pub dump_gram: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PointArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub c: String,
}

#[derive(Args, Debug)]
pub struct ShapeArgs {
    #[arg(long)]
    pub lambda: String,
}

#[derive(Args, Debug)]
pub struct LocusArgs {
    #[arg(long)]
    pub lambda: String,
    /// Denominator bound B; must be at least 2n + 2.
    #[arg(long, default_value_t = 14)]
    pub bound: u32,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    pub n_max: usize,
    #[arg(long, default_value_t = 14)]
    pub bound: u32,
}

/// Largest n accepted by the module commands.
pub const MAX_N: usize = 8;
/// Largest n_max accepted by `verify`.
pub const MAX_VERIFY_N: usize = 7;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Guard(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Output(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Core(e) => match e {
                Error::Parse(_) | Error::InvalidShape(_) | Error::SizeMismatch(_) => 2,
                Error::SizeGuard { .. } => 3,
                _ => 4,
            },
            CliError::Io(_) | CliError::Output(_) => 4,
        }
    }
}

pub fn parse_c(s: &str) -> Result<RationalC, CliError> {
    s.parse().map_err(|e: Error| CliError::Usage(format!("--c {s}: {e}")))
}

pub fn parse_partition(s: &str) -> Result<Partition, CliError> {
    let p: Partition = s.parse().map_err(|e: Error| CliError::Usage(format!("--lambda {s}: {e}")))?;
    if p.is_empty() {
        return Err(CliError::Usage("--lambda must be nonempty".into()));
    }
    guard_n(p.size())?;
    Ok(p)
}

pub fn parse_multipartition(s: &str) -> Result<MultiPartition, CliError> {
    let p: MultiPartition = s.parse().map_err(|e: Error| CliError::Usage(format!("--lambda {s}: {e}")))?;
    if p.size() == 0 {
        return Err(CliError::Usage("--lambda must be nonempty".into()));
    }
    guard_n(p.size())?;
    Ok(p)
}

fn guard_n(n: usize) -> Result<(), CliError> {
    if n > MAX_N {
        return Err(CliError::Guard(format!("n = {n} exceeds the limit {MAX_N}")));
    }
    Ok(())
}

/// Outcome of a command: the rendered output and whether it reports agreement.
pub struct Rendered {
    pub text: String,
    pub agreement: bool,
}

fn run(cli: Cli) -> Result<Rendered, CliError> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Output(e.to_string()))?;
    }
    if let Some(bits) = cli.precision_start_bits {
        heckeform::exact::sign::set_default_precision_bits(bits);
    }
    let f = cli.format;
    match cli.command {
        Command::Gram(a) => commands::gram(&a, f),
        Command::Unitary(a) => commands::unitary(&a, f),
        Command::Locus(a) => commands::locus(&a, f),
        Command::Verify(a) => commands::verify(&a, f),
        Command::Jantzen(a) => commands::jantzen(&a, f),
        Command::Det(a) => commands::det(&a, f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(r) => {
            print!("{}", r.text);
            if r.agreement {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("heckeform: {e}");
            ExitCode::from(e.code())
        }
    }
}
