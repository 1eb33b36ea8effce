fn main() {
    std::process::exit(parind::cli::run());
}
