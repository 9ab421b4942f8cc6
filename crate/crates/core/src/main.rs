fn main() {
    std::process::exit(xbifix::cli::run());
}
