mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use cyclorep::ansearch::Strategy;

use crate::commands::Outcome;
use crate::report::{CliError, Report};

#[derive(Debug, Parser)]
#[command(
    name = "cyclo",
    version,
    about = "Cyclotomic fields, circulant representations and sparse cyclotomic multiples"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print elapsed time to stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Phi_n with its totient, radical, height, flatness and order.
    Profile { n: u64 },
    /// Coefficients of Phi_n.
    Cyclotomic { n: u64 },
    /// Lexicographically least minimum-degree member of A_n.
    SearchAn {
        n: u64,
        #[arg(long, default_value = "exhaustive")]
        strategy: Strategy,
        /// Node budget; defaults to unlimited for n <= 36.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Lower bound, constructive upper bounds and exact value for A_n.
    Bounds { n: u64 },
    /// Cayley digraph representing the subfield of index r in Q(zeta_p).
    Cayley {
        p: u64,
        r: u64,
        /// Print the digraph in DOT format.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
    },
    /// Polynomial g with J = g(A) for a regular strongly connected 0/1 matrix.
    Hoffman {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Symmetric circulant W + W^(n-1) and the minimal polynomial of zeta + zeta^-1.
    Sym { n: u64 },
    /// Smallest order of a circulant matrix representing Q(zeta_n).
    SmallestOrder { n: u64 },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<u64>,
    },
}

/// An empty report carrying the command name and its arguments.
fn inputs(command: &Command) -> Report {
    match command {
        Command::Profile { n } => Report::new("profile").input("n", n),
        Command::Cyclotomic { n } => Report::new("cyclotomic").input("n", n),
        Command::SearchAn { n, strategy, budget } => Report::new("search-an")
            .input("n", n)
            .input("strategy", strategy)
            .input("budget", budget),
        Command::Bounds { n } => Report::new("bounds").input("n", n),
        Command::Cayley { p, r, .. } => Report::new("cayley").input("p", p).input("r", r),
        Command::Hoffman { matrix } => Report::new("hoffman").input("matrix", matrix.display().to_string()),
        Command::Sym { n } => Report::new("sym").input("n", n),
        Command::SmallestOrder { n } => Report::new("smallest-order").input("n", n),
        Command::Verify { suite, max_n } => Report::new("verify").input("suite", suite).input("max_n", max_n),
    }
}

fn dispatch(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Profile { n } => commands::profile_cmd(*n),
        Command::Cyclotomic { n } => commands::cyclotomic_cmd(*n),
        Command::SearchAn { n, strategy, budget } => commands::search_cmd(*n, *strategy, *budget),
        Command::Bounds { n } => commands::bounds_cmd(*n),
        Command::Cayley { p, r, .. } => commands::cayley_cmd(*p, *r),
        Command::Hoffman { matrix } => commands::hoffman_cmd(matrix),
        Command::Sym { n } => commands::sym_cmd(*n),
        Command::SmallestOrder { n } => commands::smallest_order_cmd(*n),
        Command::Verify { suite, max_n } => commands::verify_cmd(suite, *max_n),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(report: &Report) {
    emit(&format!(
        "{}\n",
        serde_json::to_string_pretty(report).expect("reports serialize")
    ));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let code = run(&cli);
    if cli.timing {
        eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    }
    code
}

fn run(cli: &Cli) -> ExitCode {
    if let Command::Cayley { p, r, dot: true } = cli.command {
        return match commands::cayley_dot(p, r) {
            Ok(dot) => {
                emit(&dot);
                ExitCode::SUCCESS
            }
            Err(e) => fail_text(&e),
        };
    }
    match dispatch(&cli.command) {
        Ok(outcome) => {
            if cli.json {
                print_json(&outcome.report);
            } else {
                emit(&outcome.text);
            }
            if outcome.report.failed_checks() > 0 {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) if cli.json => {
            let report = Report {
                error: Some(e.info()),
                ..inputs(&cli.command)
            };
            print_json(&report);
            ExitCode::FAILURE
        }
        Err(e) => fail_text(&e),
    }
}

fn fail_text(e: &CliError) -> ExitCode {
    eprintln!("error [{}]: {e}", e.kind());
    ExitCode::FAILURE
}
