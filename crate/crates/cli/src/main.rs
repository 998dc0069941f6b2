use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::CliError;

/// Invariants of the monomial ideal of independent sets of a graph.
#[derive(Debug, Parser)]
#[command(name = "indset", version)]
struct Cli {
    /// Worker threads for the parallel checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Named family: path:N, cycle:N, cyclepow:N:D, centipede:N, complete:N.
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,

    /// Edge-list file: vertex count, then one "u v" per line (1-based).
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Common {
    #[command(flatten)]
    source: Source,

    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Independence polynomial coefficients and independence number.
    Poly(Common),
    /// Betti numbers, dimensions, Cohen–Macaulayness, primes and the dual.
    Invariants {
        #[command(flatten)]
        common: Common,
        /// Node budget per restart for the dual linear-quotient search.
        #[arg(long, default_value_t = 2_000_000)]
        node_budget: u64,
    },
    /// Generators in descending order with their set sizes.
    Generators {
        #[command(flatten)]
        common: Common,
        /// Refuse graphs with more independent sets than this.
        #[arg(long, default_value_t = 1 << 20)]
        max_gens: u64,
    },
    /// Cross-check the formulas against brute-force oracles.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated subset of quotients,primdec,betti,dual.
        #[arg(long, value_delimiter = ',', default_value = "quotients,primdec,betti,dual")]
        checks: Vec<String>,
        /// Vertex cap for the primary decomposition (ideal intersection) check.
        #[arg(long, default_value_t = 5)]
        max_verify_vertices: usize,
        /// Vertex cap for the prefix-colon check.
        #[arg(long, default_value_t = 14)]
        max_quotient_vertices: usize,
        /// Ring-variable cap for the homology Betti oracle.
        #[arg(long, default_value_t = 12)]
        max_betti_vars: usize,
        /// Dual-generator cap for the dual linear-quotient search.
        #[arg(long, default_value_t = 64)]
        max_dual_gens: usize,
        /// Include per-check wall time (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::input(e.to_string()))?;
    }
    match cli.command {
        Command::Poly(c) => commands::poly(&c.source.load()?, c.format),
        Command::Invariants { common, node_budget } => {
            commands::invariants(&common.source.load()?, common.format, node_budget)
        }
        Command::Generators { common, max_gens } => {
            commands::generators(&common.source.load()?, common.format, max_gens)
        }
        Command::Verify {
            common,
            checks,
            max_verify_vertices,
            max_quotient_vertices,
            max_betti_vars,
            max_dual_gens,
            timing,
        } => {
            let caps = indset_core::verify::VerifyCaps {
                quotients_vertices: max_quotient_vertices,
                primdec_vertices: max_verify_vertices,
                betti_vars: max_betti_vars,
                dual_gens: max_dual_gens,
            };
            commands::verify(&common.source.load()?, common.format, &checks, caps, timing)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let Some(out) = &e.stdout {
                print!("{out}");
            }
            if !e.message.is_empty() {
                eprintln!("indset: {}", e.message);
            }
            ExitCode::from(e.code)
        }
    }
}
