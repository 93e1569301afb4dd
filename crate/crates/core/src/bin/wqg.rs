fn main() {
    std::process::exit(wqg::cli::main_with_std());
}
