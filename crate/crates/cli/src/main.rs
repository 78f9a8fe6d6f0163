//! `superjordan`: run the verifications and constructions from the command line.
//!
//! Exit status: 0 when every verdict passes, 1 when a verdict fails (or a stage
//! cannot be computed), 2 on a usage or configuration error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use superjordan::RepKind;

#[derive(Parser, Debug)]
#[command(name = "superjordan", version, about = "Jordanian deformation of U_q[sl(2|1)]: verification workbench")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Truncation order in h for the symbolic identity checks.
    #[arg(long, global = true, env = "SUPERJORDAN_ORDER", default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    pub order: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also compare exact entries against a floating-point build at (q0, h0).
    #[arg(long, global = true)]
    pub numeric: bool,
    #[arg(long, global = true, default_value_t = 1.21, allow_negative_numbers = true)]
    pub q0: f64,
    #[arg(long, global = true, default_value_t = 0.3, allow_negative_numbers = true)]
    pub h0: f64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Q,
    H,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Relation and identity checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Twist, contraction and assembly of R_h.
    #[command(subcommand)]
    Jordanian(JordanianCommand),
    /// Build R_q on fund (x) rep.
    #[command(subcommand)]
    Rmatrix(RmatrixCommand),
    /// Graded Yang-Baxter check for R_q or R_h.
    Ybe {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_parser = parse_rep, default_value = "fund")]
        rep: RepKind,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Defining relations in the selected representation (default: fund and fund2).
    Relations {
        #[arg(long, value_parser = parse_rep)]
        rep: Option<RepKind>,
    },
    /// Twist identities, symbolically to the truncation order and as matrix equations.
    Identities {
        #[arg(long, value_parser = parse_rep, default_value = "fund2")]
        rep: RepKind,
    },
}

#[derive(Subcommand, Debug)]
enum JordanianCommand {
    /// Gauge, valuations, limit at q = 1 and comparison with the assembled R_h.
    Run {
        #[arg(long, value_parser = parse_rep, default_value = "fund")]
        rep: RepKind,
        /// Write conjugated, valuations, limit and assembled as JSON files here.
        #[arg(long)]
        dump_stages: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum RmatrixCommand {
    /// Build the bundle (K, R^, R) and optionally compare with the block form.
    Build {
        #[arg(long, value_parser = parse_rep, default_value = "fund")]
        rep: RepKind,
        /// Write the bundle as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compare against the fund (x) rep block construction.
        #[arg(long)]
        check_block_form: bool,
    },
    /// Yang-Baxter check for R_q on rep (x) rep (x) rep.
    Ybe {
        #[arg(long, value_parser = parse_rep, default_value = "fund")]
        rep: RepKind,
    },
}

fn parse_rep(s: &str) -> Result<RepKind, String> {
    s.parse().map_err(|e: superjordan::Error| e.to_string())
}

/// Configuration error detected after parsing; maps to exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn run(cli: Cli) -> anyhow::Result<commands::Outcome> {
    let config = &cli.config;
    if config.numeric {
        let q0 = config.q0;
        if !q0.is_finite() || q0 <= 0.0 || q0 == 1.0 || !config.h0.is_finite() {
            return Err(UsageError(format!("--q0 must be positive and different from 1, got {q0}")).into());
        }
    }
    match cli.command {
        Command::Verify(VerifyCommand::Relations { rep }) => commands::verify_relations(config, rep),
        Command::Verify(VerifyCommand::Identities { rep }) => commands::verify_identities(config, rep),
        Command::Jordanian(JordanianCommand::Run { rep, dump_stages }) => commands::jordanian_run(config, rep, dump_stages.as_deref()),
        Command::Rmatrix(RmatrixCommand::Build { rep, out, check_block_form }) => {
            commands::rmatrix_build(config, rep, out.as_deref(), check_block_form)
        }
        Command::Rmatrix(RmatrixCommand::Ybe { rep }) => commands::ybe(config, Which::Q, rep),
        Command::Ybe { which, rep } => commands::ybe(config, which, rep),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.config.format;
    match run(cli) {
        Ok(outcome) => {
            outcome.print(format);
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
