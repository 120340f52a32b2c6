use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use umrow_cli::commands::{add, gb, parse_order};
use umrow_cli::{parse_field, run_suite, CliError, Suite, SuiteConfig};
use umrow_core::rows::ShrinkConfig;

#[derive(Parser)]
#[command(
    name = "umrow",
    version,
    about = "Exact checks for unimodular rows and quadric maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        shrink_budget: usize,
        /// Also write the report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Zero all timing fields.
        #[arg(long)]
        no_timing: bool,
    },
    /// Reduced Gröbner basis of an algebra description file.
    Gb {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// van der Kallen sum of two rows from a rows file.
    Add {
        #[arg(long)]
        rows: PathBuf,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        shrink_budget: usize,
    },
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Verify {
            suite,
            n_min,
            n_max,
            field,
            seed,
            shrink_budget,
            report,
            no_timing,
        } => {
            let config = SuiteConfig {
                suite: suite.parse::<Suite>()?,
                n_min,
                n_max,
                field: parse_field(&field)?,
                seed,
                shrink_budget,
            };
            config.validate()?;
            let mut rep = run_suite(&config);
            if no_timing {
                rep.cases.iter_mut().for_each(|c| c.millis = 0);
            }
            let text = rep.to_json();
            if let Some(path) = report {
                std::fs::write(&path, &text)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            }
            print!("{text}");
            Ok(rep.all_passed())
        }
        Command::Gb { input, order } => {
            let out = gb(&input, parse_order(&order)?)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("serializable")
            );
            Ok(true)
        }
        Command::Add {
            rows,
            u,
            v,
            seed,
            shrink_budget,
        } => {
            let cfg = ShrinkConfig {
                budget: shrink_budget,
                seed,
                hints: None,
            };
            let out = add(&rows, &u, &v, &cfg)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("serializable")
            );
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("umrow: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
