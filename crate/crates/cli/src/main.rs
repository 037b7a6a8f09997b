use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cohten::scenario::{run_bracket, run_gate_cnot, run_reproduce, run_simulate, Example, SimulationConfig};
use cohten::Error;

/// Coherence-tensor simulator for small qubit registers.
#[derive(Parser)]
#[command(name = "cohten", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a JSON config and write a trajectory CSV.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Regenerate the data of a bundled example (cnot, swap, cubitt).
    Reproduce {
        name: String,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Print a gate Hamiltonian.
    Gate {
        #[command(subcommand)]
        gate: Gate,
    },
    /// Decompose the bracket of two basis elements.
    Bracket {
        a: String,
        b: String,
        /// Anticommutator instead of -i times the commutator.
        #[arg(long)]
        anti: bool,
    },
}

#[derive(Subcommand)]
enum Gate {
    Cnot {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        control: usize,
        #[arg(long)]
        target: usize,
    },
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Simulate { config, out } => {
            let cfg = SimulationConfig::from_path(&config)?;
            let summary = run_simulate(&cfg, &out)?;
            println!("{summary}");
        }
        Command::Reproduce { name, out_dir } => {
            let example: Example = name.parse()?;
            print!("{}", run_reproduce(example, &out_dir)?);
        }
        Command::Gate {
            gate: Gate::Cnot { n, control, target },
        } => println!("{}", run_gate_cnot(n, control, target)?),
        Command::Bracket { a, b, anti } => println!("{}", run_bracket(&a, &b, anti)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
