use clap::Parser;

fn main() {
    let cli = topcoh::cli::Cli::parse();
    match topcoh::cli::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            std::process::exit(out.code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(topcoh::cli::EXIT_ERROR);
        }
    }
}
