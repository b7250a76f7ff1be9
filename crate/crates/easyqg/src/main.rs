fn main() {
    std::process::exit(easyqg::cli::run());
}
