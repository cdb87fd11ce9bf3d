use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let args = rimas::cli::Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match rimas::cli::run(args, &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
