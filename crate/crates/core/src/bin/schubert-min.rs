fn main() {
    std::process::exit(schubert_min::cli::main_from(std::env::args_os()));
}
