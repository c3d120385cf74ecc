use std::process::ExitCode;

use clap::Parser;

use liebound_cli::{run, Cli, Outcome};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Done(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
