fn main() {
    std::process::exit(cayley::cli::run(std::env::args_os()));
}
