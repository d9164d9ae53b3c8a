use clap::Parser;

fn main() {
    let cli = qn_tools::cli::Cli::parse();
    std::process::exit(qn_tools::cli::execute(&cli));
}
