fn main() {
    std::process::exit(ybe_garside::cli::run(std::env::args_os()));
}
