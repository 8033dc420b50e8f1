fn main() {
    std::process::exit(grouplaw_cli::run(std::env::args()));
}
