use std::io::Write;

use clap::Parser;
use wqo_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let out = run(&cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.code);
}
