fn main() {
    std::process::exit(stablesq::cli::run(std::env::args_os()));
}
