fn main() {
    std::process::exit(ucm_cli::run(std::env::args_os()));
}
