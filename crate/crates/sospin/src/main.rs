fn main() {
    std::process::exit(sospin::cli::run());
}
