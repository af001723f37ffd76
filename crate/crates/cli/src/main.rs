//! Command-line front end: one subcommand per computation, text or JSON output.
//!
//! Exit codes: 0 success, 1 internal failure, 2 resource limit, 3 completion
//! degree cap exceeded, 64 usage error.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use comtrans::rewrite::ColumnOrder;

use commands::{CliError, Degree7Ops, KindArg, MethodArg, OpsArg};

#[derive(Parser)]
#[command(name = "comtrans", version, about = "Identities and envelopes of ternary commutator and translator operations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    TranslatorFirst,
    CommutatorFirst,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite rules of the comtrans operad from the degree-3 relation matrix.
    CtGroebner {
        /// Also print the 18×12 relation matrix and its row canonical form.
        #[arg(long)]
        dump_matrix: bool,
        /// Column order of the dumped matrices.
        #[arg(long, value_enum, default_value_t = OrderArg::TranslatorFirst)]
        column_order: OrderArg,
    },
    /// Count normal forms of weight W and compare with the conjectured value.
    CtDim {
        weight: usize,
        /// Counting method; enumeration is limited to weight 3.
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Kernel and new-identity search in degree 3 or 5.
    Identities {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum)]
        ops: OpsArg,
    },
    /// Degree-7 multiplicity tables, or the two-operation check.
    Degree7 {
        #[arg(long, value_enum)]
        ops: Degree7Ops,
        /// A single partition of 7, e.g. 52 or 321^2.
        #[arg(long)]
        partition: Option<String>,
        /// Exact integer ranks instead of two-prime modular ranks (slow).
        #[arg(long)]
        exact: bool,
    },
    /// Gröbner–Shirshov basis and structure of a universal envelope.
    Envelope {
        #[arg(value_enum)]
        kind: KindArg,
        /// Largest degree of normal words to list.
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Read generators from a file instead of the matrix-unit relations.
        #[arg(long)]
        load: Option<PathBuf>,
        /// Write the Gröbner–Shirshov basis to a file.
        #[arg(long)]
        save: Option<PathBuf>,
    },
}

/// Worker threads from COMTRANS_THREADS, else the available parallelism.
fn threads() -> Result<usize, CliError> {
    match std::env::var("COMTRANS_THREADS") {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Usage(format!("COMTRANS_THREADS must be a positive integer, got {s:?}"))),
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn run(cli: Cli) -> Result<report::RunReport, CliError> {
    match cli.command {
        Command::CtGroebner {
            dump_matrix,
            column_order,
        } => {
            let order = match column_order {
                OrderArg::TranslatorFirst => ColumnOrder::TranslatorFirst,
                OrderArg::CommutatorFirst => ColumnOrder::CommutatorFirst,
            };
            commands::ct_groebner(dump_matrix, order)
        }
        Command::CtDim { weight, method } => commands::ct_dim(weight, method),
        Command::Identities { degree, ops } => commands::identities(degree, ops),
        Command::Degree7 { ops, partition, exact } => {
            commands::degree7(ops, partition.as_deref(), exact, threads()?)
        }
        Command::Envelope {
            kind,
            max_degree,
            load,
            save,
        } => commands::envelope(kind, max_degree, load, save),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(64) } else { ExitCode::SUCCESS };
        }
    };
    let format = cli.format;
    let start = Instant::now();
    match run(cli) {
        Ok(mut report) => {
            if format == Format::Json {
                print!("{}", report.to_json());
            } else {
                report.elapsed = Some(start.elapsed());
                print!("{}", report.to_text());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
