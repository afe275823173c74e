fn main() {
    std::process::exit(orzech_core::cli::run(std::env::args_os()));
}
