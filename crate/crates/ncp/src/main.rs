use clap::Parser;

fn main() {
    let cli = ncp::cli::Cli::parse();
    std::process::exit(ncp::cli::run(cli));
}
