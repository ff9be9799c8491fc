use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rootlattice::center;
use rootlattice::verify::{self, Execution, Scope, VerifyOptions};
use rootlattice::zlinalg::snf;
use rootlattice::{Error, Fault, RootSystem, TypeLabel};

use rootlattice_cli::matrix_file;
use rootlattice_cli::record::{DescribeRecord, PairingRecord, VerifyReport};
use rootlattice_cli::render::{self, Style};

#[derive(Parser, Debug)]
#[command(name = "rootlattice", version, about = "Root systems, their centers and the pairing induced by phi")]
struct Cli {
    /// Largest rank accepted for a type label.
    #[arg(long, global = true, default_value_t = 64)]
    rank_ceiling: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan matrix, Delta, Delta_dual, rho, pairing and reduction data of a type.
    Describe {
        label: String,
        #[arg(long)]
        json: bool,
    },
    /// The pairing Delta_dual x Delta_dual -> Q/Z induced by rho.
    Pairing {
        label: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification suites over the catalog.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_scope)]
        scope: Scope,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long)]
        json: bool,
        /// Check types one at a time instead of in parallel.
        #[arg(long)]
        sequential: bool,
        #[arg(long = "inject-fault", hide = true, value_parser = parse_fault)]
        faults: Vec<Fault>,
    },
    /// Smith normal form U M V = S of an integer matrix read from a file.
    Snf { file: PathBuf },
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse()
}

fn parse_fault(s: &str) -> Result<Fault, String> {
    s.parse()
}

/// Input or usage problem; exits with status 2.
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_label(s: &str, ceiling: usize) -> Result<TypeLabel, UsageError> {
    let label: TypeLabel = s.parse()?;
    if label.rank() > ceiling {
        return Err(Error::RankCeiling {
            rank: label.rank(),
            ceiling,
        }
        .into());
    }
    Ok(label)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(cli: Cli, style: Style) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Describe { label, json } => {
            let label = parse_label(&label, cli.rank_ceiling)?;
            let rec = DescribeRecord::build(label)?;
            if json {
                emit(&to_json(&rec));
            } else {
                emit(&render::describe(&rec));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pairing { label, json } => {
            let label = parse_label(&label, cli.rank_ceiling)?;
            let table = center::induced_pairing(&RootSystem::build(label))?;
            let rec = PairingRecord::new(label, &table);
            if json {
                emit(&to_json(&rec));
            } else {
                emit(&render::pairing(&rec));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            scope,
            max_rank,
            json,
            sequential,
            faults,
        } => {
            if max_rank > cli.rank_ceiling {
                return Err(Error::RankCeiling {
                    rank: max_rank,
                    ceiling: cli.rank_ceiling,
                }
                .into());
            }
            let outcome = verify::run(&VerifyOptions {
                scope,
                max_rank,
                faults,
                execution: if sequential {
                    Execution::Sequential
                } else {
                    Execution::Parallel
                },
            });
            let report = VerifyReport::new(scope, max_rank, &outcome);
            if json {
                emit(&to_json(&report));
            } else {
                emit(&render::verify(&report, style));
            }
            Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Snf { file } => {
            let src = std::fs::read_to_string(&file)
                .map_err(|e| UsageError(format!("{}: {e}", file.display())))?;
            let m = matrix_file::parse(&src).map_err(|e| UsageError(format!("{}: {e}", file.display())))?;
            let d = snf(&m);
            emit(&format!("S =\n{}\nU =\n{}\nV =\n{}\n", d.diagonal, d.left, d.right));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli, Style::from_env()) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("rootlattice: error: {msg}");
            ExitCode::from(2)
        }
    }
}
