fn main() {
    std::process::exit(zetalab::cli::main_exit_code());
}
