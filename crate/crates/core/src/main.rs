fn main() {
    std::process::exit(lrdforecast::cli::run(std::env::args_os()));
}
