fn main() {
    std::process::exit(sbppa::harness::cli::run_cli(std::env::args_os()));
}
