use std::io::{self, Write};
use std::process;

use clap::Parser;

use stemgram::cli::{self, Cli};

fn main() {
    let cli = Cli::parse();
    let mut stdout = io::stdout().lock();
    let code = match cli::run(&cli, &mut stdout) {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(io::stderr(), "error: {err}");
            err.code()
        }
    };
    drop(stdout);
    process::exit(code);
}
