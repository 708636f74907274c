use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

mod commands;
mod fixtures;
mod fuzz;

/// Exact verification and construction of pre-Lie-Rinehart structures.
///
/// Exit codes: 0 PASS, 1 FAIL, 2 input error.
#[derive(Parser)]
#[command(name = "plrk", version)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verifier matching the file's kind.
    Verify { file: PathBuf },
    /// CYBE residual, induced Poisson bracket and the pre-Lie-Rinehart algebra on Ω¹.
    Rmatrix {
        file: PathBuf,
        /// Coefficients r_ij (i < j) replacing those in the file, e.g. "1,1,2".
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
    },
    /// Cohomology dimensions of a representation over ℚ, degrees 1..=N.
    Cohomology {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Coboundary of a cochain file carrying its representation.
    Delta { file: PathBuf },
    /// Whether a cochain file is closed.
    CocycleCheck { file: PathBuf },
    /// Total algebra of an abelian extension.
    Extend(ExtendArgs),
    /// Crossed modules and crossed extensions.
    Crossed {
        #[arg(value_enum)]
        action: CrossedAction,
        file: PathBuf,
    },
    /// Conversions between 2-algebras, crossed modules and (algebra, representation, 3-cocycle) triples.
    Twoalg(TwoalgArgs),
    /// Randomized property checks.
    Fuzz {
        /// Overridden by PLRK_SEED.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        cases: usize,
    },
    #[command(hide = true)]
    GenFixtures { dir: PathBuf },
}

#[derive(Args)]
pub struct ExtendArgs {
    /// An extension file; otherwise --rep and --cocycle are required.
    pub file: Option<PathBuf>,
    /// Quotient algebra, checked against the algebra of --rep.
    #[arg(long)]
    pub algebra: Option<PathBuf>,
    /// Kernel algebra with zero anchor; abelian when omitted.
    #[arg(long)]
    pub kernel: Option<PathBuf>,
    #[arg(long)]
    pub rep: Option<PathBuf>,
    #[arg(long)]
    pub cocycle: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CrossedAction {
    Verify,
    Total,
    Cocycle3,
}

#[derive(Args)]
#[command(group(ArgGroup::new("direction").required(true).multiple(false)))]
pub struct TwoalgArgs {
    pub file: PathBuf,
    /// Strict pre-Lie 2-algebra to crossed module.
    #[arg(long, group = "direction")]
    pub to_crossed: bool,
    /// Crossed module to strict pre-Lie 2-algebra.
    #[arg(long, group = "direction")]
    pub from_crossed: bool,
    /// Skeletal pre-Lie 2-algebra to a 3-cochain carrying its representation.
    #[arg(long, group = "direction")]
    pub to_triple: bool,
    /// Degree-3 cochain with its representation to a skeletal pre-Lie 2-algebra.
    #[arg(long, group = "direction")]
    pub from_triple: bool,
    /// Pre-Lie 2-algebra to its sub-adjacent Lie 2-algebra.
    #[arg(long, group = "direction")]
    pub sub_adjacent: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { file } => commands::verify(&file, cli.json),
        Command::Rmatrix { file, r } => commands::rmatrix(&file, r.as_deref(), cli.json),
        Command::Cohomology { file, max_degree } => commands::cohomology(&file, max_degree, cli.json),
        Command::Delta { file } => commands::delta(&file),
        Command::CocycleCheck { file } => commands::cocycle_check(&file, cli.json),
        Command::Extend(args) => commands::extend(&args, cli.json),
        Command::Crossed { action, file } => commands::crossed(action, &file, cli.json),
        Command::Twoalg(args) => commands::twoalg(&args, cli.json),
        Command::Fuzz { seed, cases } => fuzz::run(seed, cases, cli.json),
        Command::GenFixtures { dir } => fixtures::write_all(&dir),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
