fn main() {
    std::process::exit(chromakit_cli::main_with_args(std::env::args_os()));
}
