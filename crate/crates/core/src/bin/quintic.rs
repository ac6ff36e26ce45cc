fn main() {
    std::process::exit(quintic::cli::run());
}
