use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use congestion_cli::commands::{self, exit, CliError};
use congestion_cli::document::to_json;
use congestion_cli::fixtures;
use congestion_cli::generate::{generate, GenParams};
use congestion_core::kapprox::GuardMode;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "congestion",
    version,
    about = "Approximate equilibria of congestion games under attack"
)]
struct Cli {
    /// Compact JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Guard {
    Strict,
    Lenient,
}

impl From<Guard> for GuardMode {
    fn from(g: Guard) -> Self {
        match g {
            Guard::Strict => GuardMode::Strict,
            Guard::Lenient => GuardMode::Lenient,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build an approximate equilibrium with factor K incrementally.
    SolveK {
        instance: PathBuf,
        /// Decimal digits of K (rounded up).
        #[arg(long, default_value_t = 12)]
        precision: u32,
        #[arg(long, value_enum, default_value_t = Guard::Lenient)]
        guard: Guard,
        /// Also write the result with its full move trace to this file.
        #[arg(long, value_name = "PATH")]
        trace: Option<PathBuf>,
    },
    /// Compute the smallest achievable factor and a witness.
    BestAlpha {
        instance: PathBuf,
        /// Cross-check against exhaustive search (small instances only).
        #[arg(long)]
        oracle_check: bool,
    },
    /// Check a load vector against a factor; exit status 1 if it fails.
    Verify {
        instance: PathBuf,
        /// Loads along the sorted coefficients, e.g. `2,2,1`.
        #[arg(long)]
        loads: String,
        /// Factor as `p` or `p/q`.
        #[arg(long, default_value = "1")]
        alpha: String,
    },
    /// Exhaustive search over non-increasing profiles.
    Oracle { instance: PathBuf },
    /// Print a seeded random instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        coeff_max: u64,
        #[arg(long, default_value_t = 10)]
        budget_max: u64,
        #[arg(long, default_value_t = 4)]
        denom_max: u64,
    },
    /// Write the canonical instances into a directory.
    Fixtures { dir: PathBuf },
}

fn print<T: Serialize>(value: &T, pretty: bool) {
    println!("{}", to_json(value, pretty));
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let pretty = cli.pretty;
    match cli.command {
        Command::SolveK {
            instance,
            precision,
            guard,
            trace,
        } => {
            let inst = commands::read_instance(&instance)?;
            let doc = commands::solve_k(&inst, precision, guard.into(), trace.is_some())?;
            if let Some(path) = trace {
                std::fs::write(&path, to_json(&doc, true) + "\n").map_err(|source| {
                    CliError::Write {
                        path: path.display().to_string(),
                        source,
                    }
                })?;
            }
            print(&doc, pretty);
            Ok(exit::OK)
        }
        Command::BestAlpha {
            instance,
            oracle_check,
        } => {
            let inst = commands::read_instance(&instance)?;
            print(&commands::best_alpha(&inst, oracle_check)?, pretty);
            Ok(exit::OK)
        }
        Command::Verify {
            instance,
            loads,
            alpha,
        } => {
            let inst = commands::read_instance(&instance)?;
            let loads = commands::parse_loads(&loads)?;
            let alpha = commands::parse_alpha(&alpha)?;
            let outcome = commands::verify(&inst, loads, &alpha)?;
            print(&outcome, pretty);
            if outcome.holds {
                return Ok(exit::OK);
            }
            if let Some(b) = &outcome.binding {
                eprintln!(
                    "not an approximate equilibrium at {}: r{} -> r{} lowers cost {} to {}",
                    outcome.alpha, b.from, b.to, b.cost, b.cost_after_move
                );
            }
            Ok(exit::NOT_EQUILIBRIUM)
        }
        Command::Oracle { instance } => {
            let inst = commands::read_instance(&instance)?;
            print(&commands::oracle(&inst)?, pretty);
            Ok(exit::OK)
        }
        Command::Gen {
            n,
            m,
            seed,
            coeff_max,
            budget_max,
            denom_max,
        } => {
            if n == 0 || m == 0 || budget_max == 0 || denom_max == 0 {
                return Err(CliError::Usage(
                    "--n, --m, --budget-max and --denom-max must be positive".into(),
                ));
            }
            let params = GenParams {
                players: n,
                resources: m,
                seed,
                coeff_max,
                budget_max,
                denom_max,
            };
            print(&generate(&params), pretty);
            Ok(exit::OK)
        }
        Command::Fixtures { dir } => {
            let written = fixtures::write_all(&dir).map_err(|source| CliError::Write {
                path: dir.display().to_string(),
                source,
            })?;
            for path in written {
                eprintln!("wrote {}", path.display());
            }
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
