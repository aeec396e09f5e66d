use clap::Parser;

use metridim_cli::cli::Cli;
use metridim_cli::commands;

fn main() {
    // clap exits with code 2 on usage errors before we get here.
    let cli = Cli::parse();
    if let Err(err) = commands::run(cli.command) {
        eprintln!("error: {}", err.message());
        std::process::exit(err.exit_code());
    }
}
