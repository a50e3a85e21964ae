//! `hypertile`: verification sweeps and exports.

mod emit;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypertile::Error;

#[derive(Parser)]
#[command(name = "hypertile", version, about = "Exact checks of four-dimensional sum-of-cubes constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites over a range of n.
    Verify(VerifyArgs),
    /// Export sets, slices, polynomials or maps.
    #[command(subcommand)]
    Emit(EmitCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Suite {
    Tiling,
    OneBlock,
    QIdentities,
    PowerSums,
    BenjaminOrrison,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Comma-separated suites.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    suites: Vec<Suite>,
    /// Inclusive range `a..b`, or a single value.
    #[arg(long, default_value = "1..10")]
    n: String,
    /// Largest exponent for the power-sum identities.
    #[arg(long, default_value_t = 15)]
    p_max: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum EmitCommand {
    /// A block in defined location.
    Block {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// An assembly with per-cube provenance.
    Assembly {
        #[arg(long)]
        assembly: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One file `w=K.json` per w-layer of an assembly.
    Slices {
        #[arg(long)]
        assembly: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Both sides of an identity.
    Poly {
        #[arg(long)]
        identity: String,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The text form of a catalog map.
    Map {
        #[arg(long)]
        id: String,
        #[arg(long)]
        n: Option<i64>,
    },
}

/// Failure of a command, carrying its exit status.
#[derive(Debug)]
pub enum Failed {
    Usage(String),
    Verification,
    Io(String),
}

impl From<Error> for Failed {
    fn from(e: Error) -> Failed {
        match e {
            Error::Internal(_) => Failed::Io(e.to_string()),
            _ => Failed::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failed {
    fn from(e: std::io::Error) -> Failed {
        Failed::Io(e.to_string())
    }
}

pub fn open_output(out: Option<&PathBuf>) -> Result<Box<dyn Write>, Failed> {
    Ok(match out {
        Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(std::io::BufWriter::new(std::io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<(), Failed> {
    match cli.command {
        Command::Verify(args) => verify::run(&args),
        Command::Emit(cmd) => match cmd {
            EmitCommand::Block { kind, n, out } => emit::block_cmd(&kind, n, out.as_ref()),
            EmitCommand::Assembly { assembly, n, out } => emit::assembly_cmd(&assembly, n, out.as_ref()),
            EmitCommand::Slices { assembly, n, out } => emit::slices(&assembly, n, &out),
            EmitCommand::Poly { identity, n, format } => emit::poly(&identity, n, format),
            EmitCommand::Map { id, n } => emit::map(&id, n),
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failed::Verification) => ExitCode::from(1),
        Err(Failed::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failed::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
