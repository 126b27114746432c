fn main() {
    std::process::exit(herzog::cli::main_with_args(std::env::args_os()));
}
