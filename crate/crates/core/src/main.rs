fn main() {
    std::process::exit(anisofem::cli::dispatch(std::env::args_os()));
}
