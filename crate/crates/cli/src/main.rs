use clap::Parser;

use chaoscrypt_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(&cli) {
        eprintln!("chaoscrypt: {e}");
        std::process::exit(e.exit_code());
    }
}
