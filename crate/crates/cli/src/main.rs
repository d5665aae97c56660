use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use scatterlab_cli::{render, run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let (value, code) = match run(&cli) {
        Ok(r) => (r.value, r.code),
        Err(e) => {
            if e.exit_code() == 2 {
                eprintln!("run `scatterlab help` for the accepted flags and formats");
            }
            (e.to_json(), e.exit_code())
        }
    };
    // a closed stdout (e.g. piped into head) is not an error
    let _ = writeln!(std::io::stdout().lock(), "{}", render(&value, cli.json_indent));
    ExitCode::from(code as u8)
}
