use clap::Parser;

fn main() {
    let cli = gsp4obs_cli::Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match gsp4obs_cli::run(cli, &mut stdout) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
