//! `hgp`: build hypergraph product codes from seed matrices, inspect their
//! canonical bases, verify transversal gates and emit pieceable schedules.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "hgp", version, about)]
struct Cli {
    /// Write JSON here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CodeArgs {
    /// Seed parity-check matrix `H_a` (text format: "rows cols" then 0/1 rows).
    #[arg(long, alias = "code")]
    seed: PathBuf,
    /// Second seed `H_b`; defaults to `H_a`.
    #[arg(long)]
    seed_b: Option<PathBuf>,
    /// Build the symmetric code HGP(H^T H, H^T H) from the seed `H`.
    #[arg(long)]
    symmetric_square: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Code parameters n, k, d, k/n and maximum stabilizer weight.
    Params {
        #[command(flatten)]
        code: CodeArgs,
        /// Compute the distance by classical enumeration.
        #[arg(long)]
        distance: bool,
    },
    /// Recompute a table of symmetric codes from a directory of seeds.
    Table {
        /// Directory with `expected.json` and one seed file per row.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Canonical logical basis with pivots and operator supports.
    Basis {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Verify a transversal gate against the canonical basis.
    VerifyGate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum)]
        gate: GateArg,
        /// Add the physical Pauli frame that fixes stabilizer signs.
        #[arg(long)]
        pauli_frame: bool,
    },
    /// Pieceable schedule for a two-qubit logical gate or a state injection.
    Schedule {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum)]
        gate: ScheduleArg,
        /// Logical qubits such as `L:3,3 R:6,5`.
        #[arg(long, num_args = 1..)]
        qubits: Vec<String>,
        /// Ancilla code seed for `inject`; its first logical Z is used.
        /// Without it the ancilla is a single bare qubit.
        #[arg(long)]
        ancilla_seed: Option<PathBuf>,
        /// Wrap the injection in a gadget.
        #[arg(long, value_enum)]
        gadget: Option<GadgetArg>,
        #[arg(long, value_enum)]
        render: Option<RenderArg>,
    },
    /// Partition validity, locality and partition distance.
    Partition {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum)]
        kind: PartitionArg,
        /// Largest number of subsets tried in the distance search.
        #[arg(long, default_value_t = 3)]
        max_subsets: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GateArg {
    Hswap,
    HswapSibling,
    Czs,
    Siblingcz,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScheduleArg {
    Cz,
    Xcx,
    Cnot,
    Inject,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetArg {
    H,
    S,
    T,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderArg {
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum PartitionArg {
    Twin,
    Sibling,
    Singleton,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
