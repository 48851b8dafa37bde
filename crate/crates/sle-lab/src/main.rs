use clap::Parser;

use sle_lab::cli::{Cli, Command};
use sle_lab::commands;

fn main() {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // pool size only affects scheduling; outputs are replica-indexed and
        // identical for any thread count
        if let Err(e) =
            rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()
        {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }
    let result = match &cli.command {
        Command::Trace(args) => commands::run_trace(args),
        Command::Field(args) => commands::run_field(args),
        Command::SleEndpoints(args) => commands::run_endpoints(args),
        Command::Ising(args) => commands::run_ising(args),
        Command::IsingScaling(args) => commands::run_ising_scaling(args),
    };
    match result {
        Ok(outputs) => {
            for path in outputs {
                println!("{}", path.display());
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
