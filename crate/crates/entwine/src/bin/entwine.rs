fn main() {
    std::process::exit(entwine::cli::run());
}
