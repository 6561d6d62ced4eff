fn main() {
    std::process::exit(sympow::cli::run())
}
