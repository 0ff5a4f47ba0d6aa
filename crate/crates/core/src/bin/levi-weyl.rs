fn main() {
    std::process::exit(levi_weyl::cli::run(std::env::args_os()));
}
