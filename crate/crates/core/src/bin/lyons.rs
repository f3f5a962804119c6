fn main() {
    std::process::exit(lyons::cli::run(std::env::args_os()));
}
