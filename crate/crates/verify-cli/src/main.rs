use clap::Parser;

use verify_cli::cli;

fn main() {
    let parsed = match cli::Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own message; map usage problems to exit 3
            let _ = e.print();
            std::process::exit(cli::EXIT_USAGE);
        }
    };
    std::process::exit(cli::run(parsed));
}
