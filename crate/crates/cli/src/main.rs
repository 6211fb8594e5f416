use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mutalg_cli::api::{serve, AppState};
use mutalg_cli::commands::{self, budget_from_env, CommandResult, Failure};
use mutalg_cli::input::{parse_input, parse_sequence, Input};

/// Signed mutation of skew-symmetrizable matrices, valued quivers, root
/// systems and Lie algebra presentations.
///
/// INPUT is a Dynkin type (`A3`), the arrow language
/// (`1 -(-1,-1)-> 2; 2 -(-1,-2)-> 3`), a JSON quiver or matrix, a file
/// holding any of these, or `-` for standard input. Vertices are numbered
/// from 1.
///
/// Exit codes: 0 success, 2 unparseable input, 3 semantic error or failed
/// check, 4 search budget exceeded (set with MUTALG_BUDGET).
#[derive(Parser)]
#[command(name = "mutalg", version)]
struct Cli {
    /// Print the JSON payload instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Mutate along a sequence, warning when purity breaks.
    Mutate {
        input: String,
        /// Vertices, e.g. `2,1,3`.
        #[arg(short, long, default_value = "")]
        seq: String,
    },
    /// List the mutation class.
    Class {
        input: String,
        /// Identify members that differ by a relabeling of vertices.
        #[arg(long)]
        quotient: bool,
    },
    /// List the roots generated by the Cartan counterpart.
    Roots { input: String },
    /// Check the Lie algebra presentation after mutating along a sequence.
    Verify {
        input: String,
        #[arg(short, long, default_value = "")]
        seq: String,
    },
    /// Run the HTTP session service.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        addr: String,
    },
}

fn run(cli: &Cli) -> Result<CommandResult, Failure> {
    let input = |s: &str| -> Result<Input, Failure> { parse_input(s).map_err(Failure::Parse) };
    let seq = |s: &str| parse_sequence(s).map_err(Failure::Parse);
    match &cli.cmd {
        Cmd::Mutate { input: i, seq: s } => commands::mutate(&input(i)?, &seq(s)?),
        Cmd::Class { input: i, quotient } => commands::class(&input(i)?, budget_from_env()?, *quotient),
        Cmd::Roots { input: i } => commands::roots(&input(i)?, budget_from_env()?),
        Cmd::Verify { input: i, seq: s } => commands::verify(&input(i)?, &seq(s)?, budget_from_env()?),
        Cmd::Serve { .. } => unreachable!("handled in main"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Cmd::Serve { addr } = &cli.cmd {
        let budget = match std::env::var("MUTALG_BUDGET") {
            Ok(_) => match budget_from_env() {
                Ok(b) => b,
                Err(f) => {
                    eprintln!("error: {}", f.message());
                    return ExitCode::from(f.exit_code());
                }
            },
            Err(_) => mutalg_cli::api::SERVICE_BUDGET,
        };
        let rt = tokio::runtime::Runtime::new().expect("tokio runtime");
        return match rt.block_on(serve(addr, AppState::new(budget))) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(3)
            }
        };
    }
    match run(&cli) {
        Ok(res) => {
            let out = if cli.json {
                serde_json::to_string_pretty(&res.payload).expect("payload serializes")
            } else {
                res.text
            };
            // A closed pipe (`mutalg class E6 | head`) is not an error.
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            if res.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(f) => {
            if cli.json {
                println!("{}", serde_json::json!({"error": f.message(), "exit_code": f.exit_code()}));
            }
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
