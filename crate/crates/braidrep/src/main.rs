fn main() {
    std::process::exit(braidrep::cli::main_exit_code());
}
