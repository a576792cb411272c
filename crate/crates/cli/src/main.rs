//! Command-line interface for the exact quintic mirror-symmetry engine.
//!
//! Subcommands:
//! - `gw-invariant`: one genus-zero invariant via the fixed-point graph sum,
//! - `graphs`: the decorated-tree census behind that sum,
//! - `i-function`: the hypergeometric series for either theory,
//! - `mirror-check`: order-by-order recursion, residue, reassembly,
//!   decay, and localization checks,
//! - `fjrw-invariants`: the narrow-theory invariant table,
//! - `spin-rank`: degree/rank/dimension bookkeeping for spin structures,
//! - `selfcheck`: the full acceptance suite.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use quintic_mirror::report::ErrorRecord;
use quintic_mirror_cli::{
    cmd_fjrw_invariants, cmd_graphs, cmd_gw_invariant, cmd_i_function, cmd_mirror_check,
    cmd_selfcheck, cmd_spin_rank, emit, CliError, Format, RunConfig, Theory, EXIT_USAGE,
};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TheoryArg {
    Gw,
    Fjrw,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Comma-separated torus weights, e.g. "1,3,9,27,81" or "1/2,-3,5,7,9".
    #[arg(long, global = true)]
    alpha: Option<String>,

    /// Seed for derived weight vectors (ignored when --alpha is given).
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Series order for mirror checks.
    #[arg(long, global = true, default_value_t = 3)]
    q_order: usize,

    /// Depth of the large-z decay check.
    #[arg(long, global = true, default_value_t = 6)]
    z_tail: u32,

    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Output format for data records on stdout.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Debug, Parser)]
#[command(
    name = "quintic-mirror",
    about = "Exact genus-zero mirror symmetry checks for the quintic threefold",
    version
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute one genus-zero invariant by the fixed-point graph sum.
    GwInvariant {
        /// Curve degree.
        #[arg(long)]
        degree: u32,
        /// Insertions like "H^3" or "H*psi^2"; repeatable.
        #[arg(long)]
        insert: Vec<String>,
        /// Recompute under this many fresh seeded weight vectors and compare.
        #[arg(long, default_value_t = 0)]
        verify_alpha: usize,
    },
    /// Enumerate the decorated trees indexing fixed loci.
    Graphs {
        /// Number of marked points.
        #[arg(long, default_value_t = 0)]
        marks: usize,
        /// Total curve degree.
        #[arg(long)]
        degree: u32,
        /// Print only the census size.
        #[arg(long, default_value_t = false)]
        count_only: bool,
    },
    /// Print the hypergeometric series components for a theory.
    IFunction {
        #[arg(long, value_enum)]
        theory: TheoryArg,
        /// Series truncation order.
        #[arg(long)]
        order: usize,
    },
    /// Run the order-by-order mirror verification for a theory.
    MirrorCheck {
        #[arg(long, value_enum)]
        theory: TheoryArg,
    },
    /// Tabulate the narrow-theory invariants with all identical insertions.
    FjrwInvariants {
        /// Largest number of insertions to tabulate.
        #[arg(long, default_value_t = 8)]
        max_insertions: usize,
    },
    /// Report spin-structure degree, obstruction rank, and virtual dimension.
    SpinRank {
        /// Comma-separated multiplicities in 1..=4, e.g. "2,2,2".
        multiplicities: String,
    },
    /// Run the full acceptance suite.
    Selfcheck,
}

fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    if let Some(jobs) = cli.global.jobs {
        if jobs == 0 {
            return Err(CliError::usage("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::usage(format!("thread pool setup failed: {e}")))?;
    }
    let config = RunConfig {
        alpha: cli.global.alpha.clone(),
        seed: cli.global.seed,
        q_order: cli.global.q_order,
        z_tail: cli.global.z_tail,
        format: match cli.global.format {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        },
    };
    match cli.command {
        Command::GwInvariant {
            degree,
            insert,
            verify_alpha,
        } => cmd_gw_invariant(&config, degree, &insert, verify_alpha, out, err),
        Command::Graphs {
            marks,
            degree,
            count_only,
        } => cmd_graphs(&config, marks, degree, count_only, out),
        Command::IFunction { theory, order } => {
            let theory = match theory {
                TheoryArg::Gw => Theory::Gw,
                TheoryArg::Fjrw => Theory::Fjrw,
            };
            cmd_i_function(&config, theory, order, out)
        }
        Command::MirrorCheck { theory } => {
            let theory = match theory {
                TheoryArg::Gw => Theory::Gw,
                TheoryArg::Fjrw => Theory::Fjrw,
            };
            cmd_mirror_check(&config, theory, out, err)
        }
        Command::FjrwInvariants { max_insertions } => {
            cmd_fjrw_invariants(&config, max_insertions, out)
        }
        Command::SpinRank { multiplicities } => cmd_spin_rank(&config, &multiplicities, out),
        Command::Selfcheck => cmd_selfcheck(&config, out, err),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.global.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = match run(cli, &mut out, &mut err) {
        Ok(code) => code,
        Err(e) => {
            let record = ErrorRecord {
                error: e.message.clone(),
            };
            if emit(format, &[record], &mut out).is_err() {
                let _ = writeln!(err, "error: {}", e.message);
            }
            e.exit
        }
    };
    u8::try_from(code).map(ExitCode::from).unwrap_or_else(|_| {
        let _ = writeln!(std::io::stderr(), "internal: exit code out of range");
        ExitCode::from(EXIT_USAGE as u8)
    })
}
