fn main() {
    std::process::exit(hopfknot::cli::run(std::env::args().collect()));
}
