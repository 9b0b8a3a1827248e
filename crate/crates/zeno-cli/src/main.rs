mod commands;
mod errors;
mod grid;
mod manifest;
mod svg;

use clap::error::ErrorKind;
use clap::Parser;

use commands::{Cli, Command};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                // argument-level problems are out-of-domain parameters
                _ => 4,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };

    let outcome = match cli.command {
        Command::Quantum(args) => commands::quantum::run(args),
        Command::Lc(args) => commands::lc::run(args),
        Command::Fit(args) => commands::fit::run(args),
        Command::Plot(args) => commands::plot::run(args),
    };

    if let Err(err) = outcome {
        eprintln!("zeno: {err}");
        std::process::exit(err.exit_code());
    }
}
