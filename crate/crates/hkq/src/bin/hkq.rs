fn main() {
    std::process::exit(hkq::cli::run(std::env::args_os()));
}
