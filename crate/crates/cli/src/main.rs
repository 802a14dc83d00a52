fn main() {
    std::process::exit(shiftdiff_cli::run(std::env::args_os()));
}
