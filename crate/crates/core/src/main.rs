fn main() {
    std::process::exit(tdcontract::cli::run(std::env::args_os()));
}
