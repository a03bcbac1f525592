use std::io::Write;

use clap::Parser;
use toric_cli::args::Cli;

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let outcome = toric_cli::run(&cli, &argv);
    let format = toric_cli::requested_format(&cli);
    if let Some(err) = outcome.output.get("error") {
        eprintln!("error: {}", err["message"].as_str().unwrap_or("unknown"));
    }
    // a closed pipe downstream is not an error of ours
    let _ = writeln!(std::io::stdout().lock(), "{}", toric_cli::render(&outcome.output, format));
    std::process::exit(outcome.exit_code);
}
