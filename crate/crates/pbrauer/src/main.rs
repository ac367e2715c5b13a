fn main() {
    std::process::exit(pbrauer::cli::run(std::env::args()));
}
