fn main() {
    std::process::exit(klfusion::cli::run());
}
