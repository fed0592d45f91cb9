fn main() {
    std::process::exit(tpkit::cli::run(std::env::args_os()));
}
