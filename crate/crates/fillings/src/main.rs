use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use fillings::cli::Cli;
use serde_json::json;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            let message = e.to_string();
            println!("{}", json!({ "error": { "kind": "Usage", "message": message.trim() } }));
            return ExitCode::from(2);
        }
    };
    match cli.run() {
        Ok(value) => {
            // a closed pipe is not worth a panic
            let _ = writeln!(std::io::stdout().lock(), "{value}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            let _ = writeln!(std::io::stdout().lock(), "{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}
