use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

mod commands;

#[derive(Parser)]
#[command(name = "cala", version, about = "Build, verify and cost Clifford+T gates for heavy-hex devices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a library gate as a circuit file.
    Build {
        gate: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Lower a circuit file to a native basis.
    Transpile {
        file: PathBuf,
        #[arg(long)]
        basis: String,
        /// Run the adjacent-gate cleanup after lowering.
        #[arg(long)]
        peephole: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a circuit file on one basis input.
    Simulate {
        file: PathBuf,
        /// Input bits, highest qubit first.
        #[arg(long)]
        input: String,
        /// Print q-sphere records instead of amplitudes.
        #[arg(long)]
        qsphere: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare a gate with an oracle, or check its truth table.
    #[command(group(ArgGroup::new("check").required(true).args(["against", "truth"])))]
    Verify {
        gate: String,
        #[arg(long, requires = "level")]
        against: Option<String>,
        #[arg(long)]
        level: Option<String>,
        /// Outputs for control assignments 00, 01, 10, 11 (`|c2 c1⟩`).
        #[arg(long)]
        truth: Option<String>,
    },
    /// Enumerate core configurations that compute a 2-input function.
    Search {
        /// Outputs for control assignments 00, 01, 10, 11 (`|c2 c1⟩`).
        #[arg(long)]
        target: String,
        #[arg(long)]
        symmetric: bool,
        #[arg(long, value_delimiter = ',', default_value = "s,sdg,t,tdg")]
        theta_set: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "h")]
        sp_set: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "i")]
        ax1_set: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "i")]
        ax2_set: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Native gate counts of a library gate.
    Cost {
        gate: String,
        #[arg(long, default_value = "ecr")]
        basis: String,
        #[arg(long, requires = "placement")]
        layout: Option<PathBuf>,
        #[arg(long, requires = "layout")]
        placement: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Target-wire trace of a 3-bit Boolean gate.
    Trace {
        gate: String,
        /// Control values as `c2 c1`, e.g. `10`.
        #[arg(long)]
        controls: String,
        #[arg(long)]
        json: bool,
    },
    /// Regenerate the reference tables and mark every cell.
    Tables {
        /// Directory for tables.txt and tables.json.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Expected values to check against instead of the bundled ones.
        #[arg(long)]
        reference: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
