use clap::Parser;

use twodist_cli::cli::Cli;
use twodist_cli::commands;

fn main() {
    let cli = Cli::parse();
    match commands::dispatch(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
